"""Integer compositions and the index combinatorics shared by all bases.

A composition of n is a tuple of positive integers summing to n; the empty
tuple is the unique composition of 0.  Compositions of n correspond to
subsets of {1, ..., n-1} via proper partial sums, and most of the maps here
(complement, transpose, refinement) are cleanest in that picture.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations


def check_composition(alpha) -> tuple:
    """Return alpha as a tuple, insisting every part is a positive integer."""
    alpha = tuple(alpha)
    for a in alpha:
        if not isinstance(a, int) or isinstance(a, bool) or a <= 0:
            raise ValueError(f"not a composition: {alpha!r}")
    return alpha


def size(alpha) -> int:
    return sum(alpha)


def length(alpha) -> int:
    return len(alpha)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple:
    """All compositions of n in canonical (lexicographic) order.

    compositions(0) == ((),); compositions(n) has 2**(n-1) entries for n >= 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    out.sort()
    return tuple(out)


def set_of(alpha) -> frozenset:
    """Proper partial sums of alpha: {a1, a1+a2, ...} excluding the total."""
    total, sums = 0, []
    for a in alpha[:-1]:
        total += a
        sums.append(total)
    return frozenset(sums)


def comp_of(subset, n: int) -> tuple:
    """Inverse of set_of: the composition of n with partial sums `subset`."""
    prev, parts = 0, []
    for s in sorted(subset):
        if not 0 < s < n:
            raise ValueError(f"subset element {s} not in 1..{n - 1}")
        parts.append(s - prev)
        prev = s
    if n > 0:
        parts.append(n - prev)
    return tuple(parts)


def complement(alpha) -> tuple:
    """Composition whose partial-sum set is the complement in {1, ..., n-1}."""
    n = sum(alpha)
    inside = set_of(alpha)
    return comp_of([s for s in range(1, n) if s not in inside], n)


def reverse(alpha) -> tuple:
    return tuple(reversed(alpha))


def transpose(alpha) -> tuple:
    """Reverse-then-complement (equivalently complement-then-reverse)."""
    return complement(reverse(alpha))


def conjugate(lam) -> tuple:
    """Conjugate of a partition: column lengths of its diagram.

    Distinct from transpose(), which is an involution on all compositions;
    the two agree only on special shapes.
    """
    lam = tuple(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"not a partition: {lam!r}")
    return tuple(sum(1 for a in lam if a >= c) for c in range(1, (lam[0] if lam else 0) + 1))


def concat(alpha, beta) -> tuple:
    return tuple(alpha) + tuple(beta)


def near_concat(alpha, beta) -> tuple:
    """Concatenation with the boundary parts merged; both factors nonempty."""
    if not alpha or not beta:
        raise ValueError("near_concat needs two nonempty compositions")
    return tuple(alpha[:-1]) + (alpha[-1] + beta[0],) + tuple(beta[1:])


def refines(alpha, beta) -> bool:
    """alpha refines beta: beta is obtained by merging adjacent parts of alpha."""
    if sum(alpha) != sum(beta):
        return False
    return set_of(beta) <= set_of(alpha)


def coarsenings(alpha):
    """All compositions that alpha refines (merge any adjacent runs)."""
    n = sum(alpha)
    inner = sorted(set_of(alpha))
    for k in range(len(inner) + 1):
        for keep in combinations(inner, k):
            yield comp_of(keep, n)


def refinements(beta):
    """All compositions refining beta, each part split independently."""
    if not beta:
        yield ()
        return
    for head in compositions(beta[0]):
        for tail in refinements(beta[1:]):
            yield head + tail


def dominated(alpha, beta) -> bool:
    """Entrywise containment: len(alpha) <= len(beta) and alpha_i <= beta_i."""
    alpha, beta = tuple(alpha), tuple(beta)
    return len(alpha) <= len(beta) and all(a <= b for a, b in zip(alpha, beta))


def sort_to_partition(alpha) -> tuple:
    return tuple(sorted(alpha, reverse=True))


def is_partition(lam) -> bool:
    lam = tuple(lam)
    return all(isinstance(a, int) and a > 0 for a in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple:
    """All partitions of n, in canonical composition order."""
    return tuple(a for a in compositions(n) if is_partition(a))


def flatten(weak) -> tuple:
    """Drop zero parts of a weak composition."""
    return tuple(a for a in weak if a)
