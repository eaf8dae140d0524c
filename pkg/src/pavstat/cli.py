"""Command-line front end: print statistic polynomials, run the
verification suites, and export coefficient tables.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from dataclasses import asdict, dataclass

from . import bijections, cfrac, closed_forms, statpoly
from .config import DEFAULT_MAX_N, ENV_MAX_N, Limits, resolve_limits
from .poly import BivarPoly, UnivarPoly, is_log_concave, is_symmetric, is_unimodal

EPILOG = f"""\
polynomial rendering:
  Terms are printed in ascending total degree, ties broken by ascending
  q-degree; within one variable, ascending exponent.  Examples: "1 + q*t",
  "t^2 + q*t", "-t + t^2".

length cap:
  Commands that enumerate permutations refuse lengths above the cap.
  Resolution order: --max-n flag, then ${ENV_MAX_N}, then {DEFAULT_MAX_N}
  (15 with --extended).
"""

SUITES = ("symmetry", "unimodality", "parity", "signed", "cf", "gf", "dyck")


@dataclass
class CheckResult:
    suite: str
    label: str
    passed: bool
    seconds: float
    detail: str = ""


def _check(suite: str, label: str, fn) -> CheckResult:
    start = time.perf_counter()
    try:
        outcome = fn()
        passed, detail = (outcome, "") if isinstance(outcome, bool) else outcome
    except (ArithmeticError, AssertionError, ValueError) as exc:
        passed, detail = False, str(exc)
    return CheckResult(suite, label, passed, time.perf_counter() - start, detail)


def _suite_range(explicit: int | None, default: int, limits: Limits) -> int:
    if explicit is not None:
        return explicit
    return min(default, limits.max_n)


# ---------------------------------------------------------------------------
# verification suites


def _orbit_pairing(n: int, k: int):
    top = n * k
    for i in range(k * k, top - k * k + 1):
        stats = bijections.rotation_orbits(n, k, i)
        if stats.class_size != stats.image_size:
            return False, (
                f"class sizes differ at maj={i}: "
                f"{stats.class_size} vs {stats.image_size}"
            )
        if set(stats.orbit_sizes) - {1, 2}:
            return False, f"unexpected orbit sizes {stats.orbit_sizes} at maj={i}"
        if 2 * i != top and stats.fixed_points:
            return False, f"fixed points off the center class at maj={i}"
    return True, ""


def suite_symmetry(max_n: int | None, limits: Limits) -> list[CheckResult]:
    results = []
    lim = _suite_range(max_n, 8, limits)
    for n in range(1, lim + 1):
        for k in range(n):
            results.append(
                _check(
                    "symmetry",
                    f"ank({n},{k}) coefficients symmetric",
                    lambda n=n, k=k: _poly_check(
                        is_symmetric(statpoly.maj_slice(n, k)), statpoly.maj_slice(n, k)
                    ),
                )
            )
    for n in range(1, min(lim, 7) + 1):
        for k in range(n):
            results.append(
                _check(
                    "symmetry",
                    f"rotation pairs maj classes, n={n} k={k}",
                    lambda n=n, k=k: _orbit_pairing(n, k),
                )
            )
    return results


def _poly_check(ok: bool, poly):
    return ok, ("" if ok else f"offending polynomial: {poly}")


def suite_unimodality(max_n: int | None, limits: Limits) -> list[CheckResult]:
    results = []
    lim = _suite_range(max_n, 10, limits)
    failures = []
    for n in range(1, lim + 1):
        for k in range(n):
            results.append(
                _check(
                    "unimodality",
                    f"ank({n},{k}) unimodal",
                    lambda n=n, k=k: _poly_check(
                        is_unimodal(statpoly.maj_slice(n, k)), statpoly.maj_slice(n, k)
                    ),
                )
            )
            if not is_log_concave(statpoly.maj_slice(n, k)):
                failures.append(f"ank({n},{k})")
    if lim >= 6:
        results.append(
            _check(
                "unimodality",
                "log-concavity exceptions include ank(6,2)",
                lambda: ("ank(6,2)" in failures, f"exceptions found: {failures}"),
            )
        )
    if failures:
        results.append(
            CheckResult(
                "unimodality",
                f"log-concavity exception report: {', '.join(failures)}",
                True,
                0.0,
            )
        )
    return results


def suite_parity(max_n: int | None, limits: Limits) -> list[CheckResult]:
    results = []
    lim = max_n if max_n is not None else limits.max_n
    lengths = [n for n in (1, 3, 7, 15) if n <= lim and (n != 15 or limits.extended)]
    checks = (
        ("inv distribution", bijections.parity_inv),
        ("maj distribution", bijections.parity_maj_q),
        ("descent distribution", bijections.parity_maj_t),
    )
    for n in lengths:
        for what, fn in checks:
            results.append(
                _check("parity", f"{what} at n={n}: leading 1, rest even", lambda fn=fn, n=n: fn(n))
            )
    for n in (3, 5, 7):
        if n > lim:
            continue
        for k in range(0, n, 2):
            results.append(
                _check(
                    "parity",
                    f"rotation fixed points match inflations, n={n} k={k}",
                    # raises on mismatch, so reaching the return means agreement
                    lambda n=n, k=k: bijections.rotation_fixed_points(n, k) is not None,
                )
            )
    for n in (3, 7):
        if n > lim:
            continue
        for k in range(2, n, 2):
            results.append(
                _check(
                    "parity",
                    f"fixed-point count even, n={n} k={k}",
                    lambda n=n, k=k: len(bijections.rotation_fixed_points(n, k)) % 2 == 0,
                )
            )
    return results


def suite_signed(max_n: int | None, limits: Limits) -> list[CheckResult]:
    results = []
    lim = _suite_range(max_n, 10, limits)
    for n in range(1, min(lim, 10) + 1):
        results.append(
            _check(
                "signed",
                f"sign-enumeration identity, n={n}",
                lambda n=n: (
                    closed_forms.verify_sign_enumeration(n),
                    f"enumeration {statpoly.signed_inv_poly(n)} vs "
                    f"formula {closed_forms.signed_poly_formula(n)}",
                ),
            )
        )
    for n in range(1, min(5, lim // 2) + 1):
        results.append(
            _check(
                "signed",
                f"even-step recurrence, n={n}",
                lambda n=n: closed_forms.verify_even_step_recurrence(n),
            )
        )
    for n in range(2, min(5, (lim - 1) // 2) + 1):
        results.append(
            _check(
                "signed",
                f"three-term recurrence, n={n}",
                lambda n=n: closed_forms.verify_three_term_recurrence(n),
            )
        )
    for m in range(1, (min(11, lim) + 1) // 2 + 1):
        if 2 * m <= lim:
            results.append(
                _check(
                    "signed",
                    f"signed total vanishes at even length {2 * m}",
                    lambda m=m: statpoly.signed_inv_poly(2 * m).evaluate(1) == 0,
                )
            )
        if 2 * m + 1 <= min(11, lim):
            results.append(
                _check(
                    "signed",
                    f"signed total at odd length {2 * m + 1} is catalan({m})",
                    lambda m=m: statpoly.signed_inv_poly(2 * m + 1).evaluate(1)
                    == closed_forms.catalan(m),
                )
            )
    return results


def _random_unit_cf(rng: random.Random, depth: int) -> cfrac.ContinuedFraction:
    nums = [{0: rng.choice([1, 2, 3])}]
    for _ in range(depth - 1):
        nums.append({rng.randint(1, 2): rng.choice([-3, -2, -1, 1, 2, 3])})
    dens = [{0: 1} for _ in range(depth)]
    return cfrac.ContinuedFraction(tuple(nums), tuple(dens))


def _contraction_agreement(cases: int = 20, order: int = 10) -> tuple[bool, str]:
    rng = random.Random(20210321)
    for case in range(cases):
        cf = _random_unit_cf(rng, 2 * order + 6)
        direct = cfrac.expand(cf, order)
        if cfrac.expand(cfrac.even_contraction(cf), order) != direct:
            return False, f"even contraction disagrees on case {case}"
        if cfrac.expand(cfrac.odd_contraction(cf), order) != direct:
            return False, f"odd contraction disagrees on case {case}"
    return True, ""


def suite_cf(max_n: int | None, limits: Limits) -> list[CheckResult]:
    results = []
    order = _suite_range(max_n, 8, limits)
    expansion = cfrac.expand(cfrac.inv_cf(order + 2), order)
    for n in range(order + 1):
        results.append(
            _check(
                "cf",
                f"fraction expansion coefficient z^{n} equals inv_poly({n})",
                lambda n=n: (
                    expansion.coeff(n) == statpoly.inv_poly(n),
                    f"expansion {expansion.coeff(n)} vs enumeration {statpoly.inv_poly(n)}",
                ),
            )
        )
    results.append(
        _check("cf", "even/odd contraction agreement (20 random fractions)", _contraction_agreement)
    )

    def catalan_interleaved():
        cf = cfrac.substitute_qt(cfrac.inv_cf(25), -1, 1)
        got = cfrac.expand(cfrac.odd_contraction(cf), 9).coefficients()
        want = [1, 1, 0, 1, 0, 2, 0, 5, 0, 14]
        return got == want, f"expected {want}, got {got}"

    results.append(
        _check("cf", "odd contraction at q=-1, t=1 gives interleaved catalan", catalan_interleaved)
    )
    return results


def suite_gf(max_n: int | None, limits: Limits) -> list[CheckResult]:
    results = []
    lim = _suite_range(max_n, 12, limits)

    def gf_matches():
        series = closed_forms.signed_gf(lim)
        for n in range(lim + 1):
            if series.coeff(n) != statpoly.signed_inv_poly(n):
                return False, (
                    f"z^{n}: closed form {series.coeff(n)} vs "
                    f"enumeration {statpoly.signed_inv_poly(n)}"
                )
        return True, ""

    results.append(_check("gf", f"signed generating function to z^{lim}", gf_matches))

    odd_order = max(1, min(6, (lim - 1) // 2))

    def gf_odd_matches():
        series = closed_forms.signed_gf_odd(odd_order)
        for n in range(odd_order + 1):
            if series.coeff(n) != statpoly.signed_inv_poly(2 * n + 1):
                return False, (
                    f"z^{n}: closed form {series.coeff(n)} vs "
                    f"enumeration {statpoly.signed_inv_poly(2 * n + 1)}"
                )
        return True, ""

    results.append(_check("gf", f"odd signed generating function to z^{odd_order}", gf_odd_matches))

    fe_order = min(11, lim)
    results.append(
        _check(
            "gf",
            f"functional equation vanishes through z^{fe_order - 1}",
            lambda: closed_forms.verify_functional_equation(fe_order),
        )
    )
    refl_order = min(10, lim)
    results.append(
        _check(
            "gf",
            f"reflection identity holds through z^{refl_order}",
            lambda: closed_forms.verify_reflection_identity(refl_order),
        )
    )
    results.append(
        _check(
            "gf",
            "differential equation vanishes through z^10",
            lambda: closed_forms.verify_signed_ode(11, enumerate_up_to=min(lim, 13)),
        )
    )
    for n in range(min(12, lim) + 1):
        results.append(
            _check(
                "gf",
                f"inverse-sqrt coefficient identity, n={n}",
                lambda n=n: closed_forms.verify_lagrange_identity(n),
            )
        )
    for n in range((min(11, lim) - 1) // 2 + 1):
        results.append(
            _check(
                "gf",
                f"binomial coefficient predictions at length {2 * n + 1}",
                lambda n=n: closed_forms.verify_coefficient_predictions(n),
            )
        )
    return results


def suite_dyck(max_n: int | None, limits: Limits) -> list[CheckResult]:
    results = []
    lim = _suite_range(max_n, 12, limits)
    for n in range(1, lim + 1):
        results.append(
            _check(
                "dyck",
                f"symmetric path counts match formula, semilength {n}",
                lambda n=n: all(
                    bijections.count_symmetric_dyck(n, k) == closed_forms.signed_enum_coeff(n, k)
                    for k in range(1, n + 1)
                ),
            )
        )
        results.append(
            _check(
                "dyck",
                f"symmetric path row sum matches formula row sum, semilength {n}",
                lambda n=n: sum(
                    bijections.count_symmetric_dyck(n, k) for k in range(1, n + 1)
                )
                == sum(closed_forms.signed_enum_coeff(n, k) for k in range(1, n + 1)),
            )
        )
    return results


SUITE_RUNNERS = {
    "symmetry": suite_symmetry,
    "unimodality": suite_unimodality,
    "parity": suite_parity,
    "signed": suite_signed,
    "cf": suite_cf,
    "gf": suite_gf,
    "dyck": suite_dyck,
}


# ---------------------------------------------------------------------------
# commands


def _render_poly_json(kind: str, n: int, k: int | None, poly) -> dict:
    doc: dict = {"kind": kind, "n": n}
    if k is not None:
        doc["k"] = k
    if isinstance(poly, BivarPoly):
        keys = sorted(poly.terms, key=lambda key: (key[0] + key[1], key[0]))
        doc["variables"] = ["q", "t"]
        doc["terms"] = [{"q": qe, "t": te, "coeff": poly.terms[(qe, te)]} for qe, te in keys]
    else:
        doc["variables"] = [poly.var]
        doc["terms"] = [{"exp": e, "coeff": poly.coeffs[e]} for e in sorted(poly.coeffs)]
    doc["text"] = str(poly)
    return doc


def cmd_poly(args) -> int:
    limits = resolve_limits(args.max_n)
    if args.n < 0:
        print("length must be nonnegative", file=sys.stderr)
        return 2
    if args.n > limits.max_n:
        print(
            f"refusing n={args.n}: above the configured cap of {limits.max_n} "
            f"(raise with --max-n or {ENV_MAX_N})",
            file=sys.stderr,
        )
        return 2
    if args.kind == "ank":
        if args.k is None:
            print("kind 'ank' needs both n and k", file=sys.stderr)
            return 2
        poly = statpoly.maj_slice(args.n, args.k)
    elif args.kind == "maj":
        poly = statpoly.maj_poly(args.n)
    elif args.kind == "inv":
        poly = statpoly.inv_poly(args.n)
    else:
        poly = statpoly.signed_inv_poly(args.n)
    if args.json:
        print(json.dumps(_render_poly_json(args.kind, args.n, args.k, poly)))
    else:
        print(poly)
    return 0


def cmd_verify(args) -> int:
    limits = resolve_limits(None, extended=args.extended)
    names = SUITES if args.suite == "all" else (args.suite,)
    results: list[CheckResult] = []
    for name in names:
        results.extend(SUITE_RUNNERS[name](args.max_n, limits))
    if args.json:
        print(json.dumps([asdict(r) for r in results], indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"[{status}] {r.suite}: {r.label} ({r.seconds:.2f}s)")
            if not r.passed and r.detail:
                print(f"       {r.detail}")
        failed = sum(not r.passed for r in results)
        total_time = sum(r.seconds for r in results)
        print(f"{len(results) - failed}/{len(results)} checks passed in {total_time:.1f}s")
    return 0 if all(r.passed for r in results) else 1


def _export_rows(what: str, lim: int) -> tuple[list[str], list[tuple[int, ...]]]:
    if what == "catalan":
        return ["n", "value"], [(n, closed_forms.catalan(n)) for n in range(lim + 1)]
    rows = []
    if what == "narayana":
        for n in range(1, lim + 1):
            rows.extend((n, k, closed_forms.narayana(n, k)) for k in range(1, n + 1))
    elif what == "s_nk":
        for n in range(1, lim + 1):
            rows.extend((n, k, closed_forms.signed_enum_coeff(n, k)) for k in range(1, n + 1))
    else:  # ank: descent-count distribution values ank(n,k) at q=1
        for n in range(1, lim + 1):
            rows.extend(
                (n, k, statpoly.maj_slice(n, k).evaluate(1)) for k in range(n)
            )
    return ["n", "k", "value"], rows


def cmd_export(args) -> int:
    limits = resolve_limits(args.max_n)
    header, rows = _export_rows(args.what, limits.max_n)
    out = open(args.path, "w", newline="") if args.path else sys.stdout
    try:
        if args.format == "csv":
            writer = csv.writer(out)
            writer.writerow(header)
            writer.writerows(rows)
        else:
            json.dump([dict(zip(header, row)) for row in rows], out, indent=2)
            out.write("\n")
    finally:
        if args.path:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pavstat",
        description="Exact statistics of 321-avoiding permutations: "
        "polynomials, identity verification, coefficient tables.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser(
        "poly",
        help="print a statistic polynomial",
        description="maj: sum q^maj t^des; inv: sum q^inv t^lrm; signed: inv "
        "polynomial at q=-1; ank: the q-polynomial over words with exactly k "
        "descents (needs k).",
    )
    p_poly.add_argument("kind", choices=["maj", "inv", "signed", "ank"])
    p_poly.add_argument("n", type=int)
    p_poly.add_argument("k", type=int, nargs="?", default=None)
    p_poly.add_argument("--max-n", type=int, default=None, help="override the length cap")
    p_poly.add_argument("--json", action="store_true", help="machine-readable output")
    p_poly.set_defaults(func=cmd_poly)

    p_verify = sub.add_parser(
        "verify",
        help="run verification suites",
        description="Exit status 0 only if every check passes.  Suites: "
        "symmetry (coefficient symmetry and rotation pairing), unimodality "
        "(plus the log-concavity exception report), parity (lengths 2^m-1 "
        "and rotation fixed points), signed (sign-enumeration identity and "
        "recurrences), cf (continued fraction expansion and contractions), "
        "gf (closed-form generating functions, functional and differential "
        "equations, coefficient identities), dyck (symmetric path counts).",
    )
    p_verify.add_argument("suite", choices=SUITES + ("all",))
    p_verify.add_argument("--max-n", type=int, default=None, help="override the suite range")
    p_verify.add_argument(
        "--extended", action="store_true", help="include the long n=15 parity run"
    )
    p_verify.add_argument("--json", action="store_true", help="machine-readable report")
    p_verify.set_defaults(func=cmd_verify)

    p_export = sub.add_parser(
        "export",
        help="write a coefficient table",
        description="Tables: narayana (lrm distribution values), s_nk "
        "(symmetric Dyck path counts), ank (descent distribution values), "
        "catalan.  CSV has a header row; JSON is an array of row objects.",
    )
    p_export.add_argument("what", choices=["narayana", "s_nk", "ank", "catalan"])
    p_export.add_argument("format", choices=["csv", "json"])
    p_export.add_argument("path", nargs="?", default=None, help="output file (default stdout)")
    p_export.add_argument("--max-n", type=int, default=None, help="table range")
    p_export.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
