import pytest

from pavstat.bijections import (
    count_symmetric_dyck,
    dyck_paths,
    is_symmetric_path,
    mirror_path,
    parity_inv,
    parity_maj_q,
    parity_maj_t,
    peak_count,
    rotation_fixed_points,
    rotation_orbits,
)
from pavstat.closed_forms import catalan, signed_enum_coeff
from pavstat.perm_core import des, enumerate_avoiders, maj, rotate180


@pytest.mark.parametrize("n", range(9))
def test_dyck_path_counts_are_catalan(n):
    paths = list(dyck_paths(n))
    assert len(paths) == catalan(n)
    assert len(set(paths)) == len(paths)
    for p in paths:
        assert p.count("U") == p.count("D") == n
        depth = 0
        for c in p:
            depth += 1 if c == "U" else -1
            assert depth >= 0
        assert depth == 0


def test_peaks_and_mirror():
    assert peak_count("UUDD") == 1
    assert peak_count("UDUD") == 2
    assert mirror_path("UUDD") == "UUDD"
    assert mirror_path("UUDDUD") == "UDUUDD"
    assert is_symmetric_path("UDUD")
    assert not is_symmetric_path("UUDDUD")


def test_symmetric_counts_small():
    assert count_symmetric_dyck(1, 1) == 1
    assert count_symmetric_dyck(2, 1) == 1  # UUDD
    assert count_symmetric_dyck(2, 2) == 1  # UDUD
    assert count_symmetric_dyck(3, 2) == 1  # UUDUDD


def test_symmetric_counts_reject_bad_input():
    with pytest.raises(ValueError):
        count_symmetric_dyck(0, 1)
    with pytest.raises(ValueError):
        count_symmetric_dyck(3, 0)


@pytest.mark.parametrize("n", range(1, 10))
def test_symmetric_counts_match_formula(n):
    for k in range(1, n + 1):
        assert count_symmetric_dyck(n, k) == signed_enum_coeff(n, k)


def test_parity_theorems_small():
    assert parity_inv(1) and parity_maj_q(1) and parity_maj_t(1)
    assert parity_inv(3) and parity_maj_q(3) and parity_maj_t(3)
    assert parity_inv(7) and parity_maj_q(7) and parity_maj_t(7)


def test_parity_rejects_other_lengths():
    for fn in (parity_inv, parity_maj_q, parity_maj_t):
        with pytest.raises(ValueError):
            fn(4)


def test_fixed_points_smallest_cases():
    assert rotation_fixed_points(1, 0) == [(1,)]
    assert rotation_fixed_points(3, 0) == [(1, 2, 3)]
    assert rotation_fixed_points(3, 2) == []


def test_fixed_points_cross_check_defining_scan():
    for n, k in ((5, 0), (5, 2), (7, 0), (7, 2), (7, 4)):
        got = rotation_fixed_points(n, k)
        target = n * k // 2
        want = sorted(
            w
            for w in enumerate_avoiders(n)
            if des(w) == k and maj(w) == target and rotate180(w) == w
        )
        assert got == want


def test_fixed_points_counts_even_at_parity_lengths():
    for n in (3, 7):
        for k in range(2, n, 2):
            assert len(rotation_fixed_points(n, k)) % 2 == 0


def test_fixed_points_preconditions():
    with pytest.raises(ValueError):
        rotation_fixed_points(4, 0)
    with pytest.raises(ValueError):
        rotation_fixed_points(5, 1)


def test_orbit_partition_center_class():
    stats = rotation_orbits(7, 2, 7)
    assert set(stats.orbit_sizes) <= {1, 2}
    assert stats.fixed_points == len(rotation_fixed_points(7, 2))
    assert stats.class_size == stats.image_size


def test_orbit_partition_off_center_pairs():
    stats = rotation_orbits(6, 2, 7)
    assert stats.target_maj != stats.n * stats.k - stats.target_maj
    assert stats.class_size == stats.image_size
    assert stats.orbit_sizes == {2: stats.class_size}
    assert stats.fixed_points == 0


def test_orbit_partition_trivial():
    stats = rotation_orbits(1, 0, 0)
    assert stats.class_size == 1
    assert stats.orbit_sizes == {1: 1}
