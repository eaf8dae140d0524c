"""Structural checks behind the symmetry and parity results: 180-degree
rotation orbits, rotation fixed points as inflations, parity of coefficient
specializations at lengths 2^m - 1, and symmetric Dyck path counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from collections.abc import Iterator

from . import statpoly
from .closed_forms import signed_enum_coeff
from .perm_core import Perm, des, enumerate_avoiders, inflate, maj, rotate180
from .poly import UnivarPoly


def dyck_paths(n: int) -> Iterator[str]:
    """All Dyck paths of semilength n as U/D strings, generated by
    depth-first backtracking with U before D."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    steps: list[str] = []

    def walk(ups: int, downs: int) -> Iterator[str]:
        if downs == n:
            yield "".join(steps)
            return
        if ups < n:
            steps.append("U")
            yield from walk(ups + 1, downs)
            steps.pop()
        if downs < ups:
            steps.append("D")
            yield from walk(ups, downs + 1)
            steps.pop()

    yield from walk(0, 0)


def peak_count(path: str) -> int:
    """Number of UD factors."""
    return path.count("UD")


def mirror_path(path: str) -> str:
    """Reflect about the vertical center line: reverse and swap U with D."""
    return "".join("U" if c == "D" else "D" for c in reversed(path))


def is_symmetric_path(path: str) -> bool:
    return path == mirror_path(path)


@lru_cache(maxsize=None)
def _symmetric_peak_histogram(n: int) -> dict[int, int]:
    hist: dict[int, int] = {}
    for p in dyck_paths(n):
        if is_symmetric_path(p):
            k = peak_count(p)
            hist[k] = hist.get(k, 0) + 1
    return hist


def count_symmetric_dyck(n: int, k: int) -> int:
    """Number of symmetric Dyck paths of semilength n with exactly k peaks.

    Counted by exhaustive generation, then checked on the spot against the
    binomial-product formula; a mismatch raises.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    count = _symmetric_peak_histogram(n).get(k, 0)
    expected = signed_enum_coeff(n, k)
    if count != expected:
        raise ArithmeticError(
            f"symmetric Dyck count ({n}, {k}): generated {count}, formula {expected}"
        )
    return count


def _is_pow2_minus_1(n: int) -> bool:
    return n >= 0 and (n + 1) & n == 0


def _coeffs_one_then_even(p: UnivarPoly) -> bool:
    if p.coeff(0) != 1:
        return False
    return all(c % 2 == 0 for e, c in p.coeffs.items() if e > 0)


def _require_parity_length(n: int) -> None:
    if not _is_pow2_minus_1(n):
        raise ValueError(f"length must be of the form 2^m - 1, got {n}")


def parity_inv(n: int) -> bool:
    """For n = 2^m - 1: does the inv distribution over the avoiders have
    constant coefficient 1 and all other coefficients even?"""
    _require_parity_length(n)
    return _coeffs_one_then_even(statpoly.inv_poly(n).subst_t(1))


def parity_maj_q(n: int) -> bool:
    """Same parity pattern for the maj distribution (t = 1)."""
    _require_parity_length(n)
    return _coeffs_one_then_even(statpoly.maj_poly(n).subst_t(1))


def parity_maj_t(n: int) -> bool:
    """Same parity pattern for the descent distribution (q = 1)."""
    _require_parity_length(n)
    return _coeffs_one_then_even(statpoly.maj_poly(n).subst_q(1))


def rotation_fixed_points(n: int, k: int) -> list[Perm]:
    """Rotation-fixed avoiders of odd length n with k descents (k even).

    Computed two ways and cross-checked: (a) scan the avoiders for words
    with des = k, maj = nk/2 fixed by rotate180; (b) build every inflation
    of 1-2-3 whose outer blocks are a shorter avoider with k/2 descents and
    its rotation, around a single center dot.  A mismatch raises.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("length must be odd")
    if k < 0 or k % 2 == 1:
        raise ValueError("descent count must be even")

    target = n * k // 2
    brute = {
        w
        for w in enumerate_avoiders(n)
        if des(w) == k and maj(w) == target and rotate180(w) == w
    }

    half = (n - 1) // 2
    if half == 0:
        constructed = {(1,)} if k == 0 else set()
    else:
        constructed = {
            inflate((1, 2, 3), (tau, (1,), rotate180(tau)))
            for tau in enumerate_avoiders(half)
            if des(tau) == k // 2
        }

    if brute != constructed:
        raise AssertionError(
            f"fixed-point sets differ for n={n}, k={k}: "
            f"scan {sorted(brute)}, construction {sorted(constructed)}"
        )
    return sorted(brute)


@dataclass(frozen=True)
class OrbitStats:
    """Rotation-orbit census of one (descent count, maj value) class."""

    n: int
    k: int
    target_maj: int
    class_size: int
    image_size: int
    fixed_points: int
    orbit_sizes: dict[int, int]


def rotation_orbits(n: int, k: int, target_maj: int) -> OrbitStats:
    """Partition a maj class and its rotation image into rotation orbits.

    The class {des = k, maj = target_maj} maps onto {des = k,
    maj = nk - target_maj} under rotate180, so the union splits into orbits
    of size one (only possible when target_maj is the center value nk/2)
    and size two.
    """
    if n < 1:
        raise ValueError("length must be positive")
    image_maj = n * k - target_maj
    cls: set[Perm] = set()
    image: set[Perm] = set()
    for w in enumerate_avoiders(n):
        if des(w) != k:
            continue
        m = maj(w)
        if m == target_maj:
            cls.add(w)
        if m == image_maj:
            image.add(w)

    universe = cls | image
    for w in universe:
        if rotate180(w) not in universe:
            raise AssertionError(f"rotation leaves the class union at {w}")
    fixed = sum(1 for w in universe if rotate180(w) == w)
    pairs = (len(universe) - fixed) // 2
    sizes = {size: count for size, count in ((1, fixed), (2, pairs)) if count}
    return OrbitStats(
        n=n,
        k=k,
        target_maj=target_maj,
        class_size=len(cls),
        image_size=len(image),
        fixed_points=fixed,
        orbit_sizes=sizes,
    )
