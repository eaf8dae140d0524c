"""Permutations in one-line notation: classical statistics, pattern
containment, lexicographic enumeration of 321-avoiders, diagram rotation,
and inflation.

A permutation of [n] is a tuple holding the values 1..n.  Positions are
1-based throughout, so descent sets live in {1, ..., n-1}; this keeps the
rotation identity maj(rotate180(w)) = n*des(w) - maj(w) literal.
"""

from __future__ import annotations

from bisect import bisect_right
from collections.abc import Iterator, Sequence

Perm = tuple[int, ...]


def as_perm(word: Sequence[int]) -> Perm:
    """Validate a one-line word and return it as a tuple."""
    w = tuple(word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w!r}")
    return w


def descent_set(w: Perm) -> list[int]:
    """Positions i (1-based) with w_i > w_{i+1}."""
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def des(w: Perm) -> int:
    """Number of descents."""
    return len(descent_set(w))


def maj(w: Perm) -> int:
    """Major index: the sum of the descent positions."""
    return sum(descent_set(w))


def inv(w: Perm) -> int:
    """Number of inversions, pairs i < j with w_i > w_j."""
    n = len(w)
    return sum(w[i] > w[j] for i in range(n) for j in range(i + 1, n))


def lrm(w: Perm) -> int:
    """Number of left-to-right maxima."""
    count = 0
    best = 0
    for v in w:
        if v > best:
            count += 1
            best = v
    return count


def _has_321(w: Sequence[int]) -> bool:
    """Linear scan for a decreasing subsequence of length 3.

    Tracks the largest value seen so far and the largest value that already
    has a larger value before it; any later smaller value completes a 321.
    """
    prefix_max = 0
    best_mid = 0
    for v in w:
        if v < best_mid:
            return True
        if v < prefix_max:
            best_mid = v
        else:
            prefix_max = v
    return False


def contains_pattern(sigma: Perm, pi: Perm) -> bool:
    """True iff some subsequence of sigma is order isomorphic to pi."""
    k = len(pi)
    n = len(sigma)
    if k == 0:
        return True
    if k > n:
        return False
    if pi == (3, 2, 1):
        return _has_321(sigma)

    chosen: list[int] = []

    def extend(idx: int, start: int) -> bool:
        if idx == k:
            return True
        for j in range(start, n - (k - idx) + 1):
            v = sigma[j]
            if all((pi[a] < pi[idx]) == (sigma[chosen[a]] < v) for a in range(idx)):
                chosen.append(j)
                if extend(idx + 1, j + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def avoids(sigma: Perm, pi: Perm) -> bool:
    """True iff sigma contains no occurrence of the pattern pi."""
    return not contains_pattern(sigma, pi)


def enumerate_avoiders(n: int) -> Iterator[Perm]:
    """Yield every 321-avoiding permutation of [n] in lexicographic order.

    Prefix-pruned backtracking: a candidate value v may extend the current
    prefix only if v exceeds the largest value that already sits below an
    earlier larger value (otherwise v would complete a 321), and a branch is
    abandoned as soon as the smallest unused value fails that test.  Nothing
    close to n! words is ever materialized.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        yield ()
        return

    unused = list(range(1, n + 1))
    word: list[int] = []

    def walk(prefix_max: int, blocked_below: int) -> Iterator[Perm]:
        if not unused:
            yield tuple(word)
            return
        if unused[0] <= blocked_below:
            # the smallest unused value can never be placed again
            return
        for i in range(bisect_right(unused, blocked_below), len(unused)):
            v = unused.pop(i)
            word.append(v)
            if v < prefix_max:
                yield from walk(prefix_max, v)
            else:
                yield from walk(v, blocked_below)
            word.pop()
            unused.insert(i, v)

    yield from walk(0, 0)


def rotate180(w: Perm) -> Perm:
    """Rotate the permutation diagram by 180 degrees.

    The result r satisfies r(i) = n+1 - w(n+1-i); it is an involution, maps
    descent positions d to n-d, and preserves 321-avoidance.
    """
    n = len(w)
    return tuple(n + 1 - w[n - 1 - i] for i in range(n))


def inflate(pattern: Perm, parts: Sequence[Perm]) -> Perm:
    """Replace each dot of the pattern's diagram by a block permutation.

    Block i occupies consecutive positions, and its values sit above exactly
    the blocks whose pattern entry is smaller.  Blocks must be nonempty.
    """
    if len(parts) != len(pattern):
        raise ValueError(
            f"need {len(pattern)} blocks for a pattern of length {len(pattern)}, got {len(parts)}"
        )
    if any(len(p) == 0 for p in parts):
        raise ValueError("empty inflation blocks are not supported")
    sizes = [len(p) for p in parts]
    out: list[int] = []
    for i, a in enumerate(pattern):
        offset = sum(sizes[j] for j, b in enumerate(pattern) if b < a)
        out.extend(v + offset for v in parts[i])
    return tuple(out)
