"""Partitions, N-tuples of partitions, and the two generalized dominance orders.

A partition is a weakly decreasing tuple of positive integers (the empty
tuple is the zero partition).  A multipartition is an N-tuple of partitions;
it indexes one basis element of the N-colored ring of symmetric functions.

Two partial orders on equal-weight multipartitions are provided.  Both
compare partial sums that mix whole component weights with part prefixes of
one component; the L order feeds the high-numbered colors in first, the R
order the low-numbered ones.  A fixed total order refining each partial
order (used for matrix layouts) breaks incomparable ties by a right-to-left
comparison of the flattened weight/parts sequence.
"""

from __future__ import annotations

import enum
import itertools
from functools import lru_cache
from typing import Iterator, List, Tuple

Partition = Tuple[int, ...]
MultiPartition = Tuple[Partition, ...]


class OrderResult(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def check_partition(parts) -> Partition:
    """Validate and normalize a partition given as any iterable of ints."""
    tup = tuple(int(p) for p in parts)
    if any(p < 1 for p in tup):
        raise ValueError(f"partition parts must be positive: {tup}")
    if any(tup[k] < tup[k + 1] for k in range(len(tup) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {tup}")
    return tup


def check_multipartition(components, n_colors=None) -> MultiPartition:
    mp = tuple(check_partition(c) for c in components)
    if n_colors is not None and len(mp) != n_colors:
        raise ValueError(f"expected {n_colors} components, got {len(mp)}")
    return mp


def weight(partition: Partition) -> int:
    return sum(partition)


def length(partition: Partition) -> int:
    return len(partition)


def mp_weight(mp: MultiPartition) -> int:
    return sum(sum(c) for c in mp)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of n (no particular order guaranteed)."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out: List[Partition] = []

    def build(remaining: int, cap: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            build(remaining - part, part, prefix + (part,))

    build(n, n, ())
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_multipartitions(n_colors: int, degree: int, kind: str = "L") -> Tuple[MultiPartition, ...]:
    """All multipartitions of the given total weight, canonically ordered.

    The order is the `total_order` of the requested kind, descending (the
    largest element first).
    """
    if n_colors < 1:
        raise ValueError("need at least one color")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    full: List[MultiPartition] = []
    for split in iter_weight_splits(n_colors, degree):
        full.extend(itertools.product(*(partitions_of(d) for d in split)))
    full.sort(key=lambda mp: _flat_key(mp, kind, degree)[::-1])
    return tuple(full)


# ---------------------------------------------------------------------------
# Partial orders
# ---------------------------------------------------------------------------


def _dominates(lam: MultiPartition, mu: MultiPartition, kind: str) -> bool:
    """All defining partial-sum inequalities of the chosen order hold."""
    n = len(lam)
    depth = max(
        [len(c) for c in lam] + [len(c) for c in mu] + [1]
    )
    weights_lam = [sum(c) for c in lam]
    weights_mu = [sum(c) for c in mu]
    for j in range(n):
        if kind == "L":
            head_lam = sum(weights_lam[j + 1:])
            head_mu = sum(weights_mu[j + 1:])
        else:
            head_lam = sum(weights_lam[:j])
            head_mu = sum(weights_mu[:j])
        run_lam, run_mu = head_lam, head_mu
        for i in range(depth):
            run_lam += lam[j][i] if i < len(lam[j]) else 0
            run_mu += mu[j][i] if i < len(mu[j]) else 0
            if run_lam < run_mu:
                return False
    return True


def _compare(lam: MultiPartition, mu: MultiPartition, kind: str) -> OrderResult:
    if len(lam) != len(mu):
        raise ValueError("multipartitions have different color counts")
    if lam == mu:
        return OrderResult.EQUAL
    if mp_weight(lam) != mp_weight(mu):
        return OrderResult.INCOMPARABLE
    ge = _dominates(lam, mu, kind)
    le = _dominates(mu, lam, kind)
    if ge and not le:
        return OrderResult.GREATER
    if le and not ge:
        return OrderResult.LESS
    return OrderResult.INCOMPARABLE


def compare_L(lam: MultiPartition, mu: MultiPartition) -> OrderResult:
    """Dominance order weighting the high-numbered colors first."""
    return _compare(lam, mu, "L")


def compare_R(lam: MultiPartition, mu: MultiPartition) -> OrderResult:
    """Dominance order weighting the low-numbered colors first."""
    return _compare(lam, mu, "R")


def compare(lam: MultiPartition, mu: MultiPartition, kind: str) -> OrderResult:
    if kind == "L":
        return compare_L(lam, mu)
    if kind == "R":
        return compare_R(lam, mu)
    raise ValueError(f"unknown order kind {kind!r}")


# ---------------------------------------------------------------------------
# Total order
# ---------------------------------------------------------------------------


def _flat_key(mp: MultiPartition, kind: str, pad: int) -> Tuple[int, ...]:
    """Flattened (weight, padded parts) sequence in the kind's color order."""
    colors = reversed(mp) if kind == "L" else mp
    key: List[int] = []
    for comp in colors:
        key.append(sum(comp))
        key.extend(comp)
        key.extend([0] * (pad - len(comp)))
    return tuple(key)


def total_order(lam: MultiPartition, mu: MultiPartition, kind: str) -> OrderResult:
    """Strict total order refining the partial order of the same kind.

    Comparable pairs inherit the partial order; incomparable pairs are
    broken by comparing the flattened sequences from the right: at the
    rightmost position where they differ, the larger entry wins.
    """
    if len(lam) != len(mu):
        raise ValueError("multipartitions have different color counts")
    if mp_weight(lam) != mp_weight(mu):
        raise ValueError("total order is defined within one graded component")
    if lam == mu:
        return OrderResult.EQUAL
    pad = mp_weight(lam)
    a = _flat_key(lam, kind, pad)[::-1]
    b = _flat_key(mu, kind, pad)[::-1]
    return OrderResult.GREATER if a < b else OrderResult.LESS


def sort_key(mp: MultiPartition, kind: str) -> Tuple[int, ...]:
    """Sort key: ascending on this key = descending in the total order."""
    return _flat_key(mp, kind, mp_weight(mp))[::-1]


# ---------------------------------------------------------------------------
# JSON form
# ---------------------------------------------------------------------------


def mp_to_json(mp: MultiPartition) -> List[List[int]]:
    """Array-of-arrays form, e.g. [[], [2]] for ((0),(2))."""
    return [list(c) for c in mp]


def mp_from_json(data, n_colors=None) -> MultiPartition:
    if not isinstance(data, (list, tuple)):
        raise ValueError("multipartition JSON must be an array of arrays")
    return check_multipartition(data, n_colors)


def iter_weight_splits(n_colors: int, degree: int) -> Iterator[Tuple[int, ...]]:
    """All compositions of `degree` into `n_colors` nonnegative parts."""
    if n_colors == 1:
        yield (degree,)
        return
    for first in range(degree + 1):
        for rest in iter_weight_splits(n_colors - 1, degree - first):
            yield (first,) + rest
