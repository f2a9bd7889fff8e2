"""Matroids given by explicit basis families.

The ground set is an ordered tuple of positive integer labels; for most of the
library it is simply (1, ..., n).  Every construction path validates the basis
exchange axiom, so a ``Matroid`` instance can always be trusted downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    ElementOutOfRange,
    EmptyBases,
    ExchangeViolation,
    OverlappingEmbedding,
    ShiftOutOfRange,
    UnequalCardinality,
)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Matroid:
    """A matroid on an ordered ground set, stored as its family of bases."""

    ground: tuple[int, ...]
    bases: frozenset[frozenset[int]]

    def __post_init__(self):
        ground = tuple(self.ground)
        if any(ground[i] >= ground[i + 1] for i in range(len(ground) - 1)):
            raise ElementOutOfRange(f"ground set must be strictly increasing: {ground}")
        if not self.bases:
            raise EmptyBases("a matroid needs at least one basis")
        gset = set(ground)
        sizes = {len(b) for b in self.bases}
        if len(sizes) != 1:
            raise UnequalCardinality(f"bases of several sizes: {sorted(sizes)}")
        for b in self.bases:
            if not b <= gset:
                raise ElementOutOfRange(f"basis {sorted(b)} not within ground set")
        _check_exchange(ground, self.bases)

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def d(self) -> int:
        return len(next(iter(self.bases)))

    def is_standard(self) -> bool:
        """True when the ground set is literally (1, ..., n)."""
        return self.ground == tuple(range(1, len(self.ground) + 1))

    def __repr__(self):  # keep small matroids readable in test output
        bases = sorted(tuple(sorted(b)) for b in self.bases)
        return f"Matroid(ground={self.ground}, bases={bases})"


def _check_exchange(ground: tuple[int, ...], bases: Iterable[frozenset[int]]) -> None:
    index = {e: i for i, e in enumerate(ground)}
    label = list(ground)
    masks = []
    for b in bases:
        m = 0
        for e in b:
            m |= 1 << index[e]
        masks.append(m)
    mask_set = set(masks)
    for m1 in masks:
        for m2 in masks:
            if m1 == m2:
                continue
            only2 = list(_bits(m2 & ~m1))
            for b1 in _bits(m1 & ~m2):
                stripped = m1 ^ (1 << b1)
                if not any(stripped | (1 << b2) in mask_set for b2 in only2):
                    raise ExchangeViolation(
                        frozenset(label[i] for i in _bits(m1)),
                        frozenset(label[i] for i in _bits(m2)),
                        label[b1],
                    )


@dataclass(frozen=True)
class SetPartition:
    """A partition of an ordered ground set into disjoint nonempty blocks."""

    ground: tuple[int, ...]
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ElementOutOfRange("empty block")
            if b & seen:
                raise ElementOutOfRange("blocks overlap")
            seen |= b
        if seen != set(self.ground):
            raise ElementOutOfRange("blocks do not cover the ground set")

    @property
    def n(self) -> int:
        return len(self.ground)

    def block_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(self.blocks)


def make_partition(ground: Iterable[int], blocks: Iterable[Iterable[int]]) -> SetPartition:
    ordered = tuple(sorted(ground))
    canon = tuple(sorted((frozenset(b) for b in blocks), key=min))
    return SetPartition(ordered, canon)


# ---------------------------------------------------------------------------
# construction helpers


def make_matroid(n: int, bases: Iterable[Iterable[int]]) -> Matroid:
    """Validate a basis family on the ground set {1, ..., n}."""
    fam = frozenset(frozenset(b) for b in bases)
    return Matroid(tuple(range(1, n + 1)), fam)


def matroid_on(ground: Iterable[int], bases: Iterable[Iterable[int]]) -> Matroid:
    fam = frozenset(frozenset(b) for b in bases)
    return Matroid(tuple(sorted(ground)), fam)


def uniform(d: int, n: int) -> Matroid:
    """The uniform matroid U_{d,n}: every d-subset of [n] is a basis."""
    return make_matroid(n, combinations(range(1, n + 1), d))


def empty_matroid() -> Matroid:
    """The matroid on the empty ground set; the identity for direct sums."""
    return Matroid((), frozenset({frozenset()}))


def relabel(m: Matroid, mapping: Mapping[int, int]) -> Matroid:
    """Apply an injective relabeling of the ground set."""
    if len(set(mapping.values())) != len(mapping):
        raise OverlappingEmbedding("relabeling is not injective")
    ground = tuple(sorted(mapping[e] for e in m.ground))
    bases = frozenset(frozenset(mapping[e] for e in b) for b in m.bases)
    return Matroid(ground, bases)


def standardize(m: Matroid) -> Matroid:
    """Order-preserving relabeling of the ground set onto (1, ..., n)."""
    if m.is_standard():
        return m
    return relabel(m, {e: i + 1 for i, e in enumerate(m.ground)})


# ---------------------------------------------------------------------------
# the basic operations


def rank(m: Matroid, subset: Iterable[int]) -> int:
    a = frozenset(subset)
    if not a <= set(m.ground):
        raise ElementOutOfRange(f"{sorted(a)} not within ground set {m.ground}")
    return max(len(b & a) for b in m.bases)


def dual(m: Matroid) -> Matroid:
    gset = frozenset(m.ground)
    return Matroid(m.ground, frozenset(gset - b for b in m.bases))


def restrict(m: Matroid, subset: Iterable[int]) -> Matroid:
    """Restriction M|S on the ground set S with its inherited order."""
    s = frozenset(subset)
    if not s <= set(m.ground):
        raise ElementOutOfRange(f"{sorted(s)} not within ground set {m.ground}")
    best = max(len(b & s) for b in m.bases)
    fam = frozenset(b & s for b in m.bases if len(b & s) == best)
    return Matroid(tuple(sorted(s)), fam)


def contract(m: Matroid, subset: Iterable[int]) -> Matroid:
    """Contraction M/T on the ground set E - T."""
    t = frozenset(subset)
    if not t <= set(m.ground):
        raise ElementOutOfRange(f"{sorted(t)} not within ground set {m.ground}")
    best = max(len(b & t) for b in m.bases)
    fam = frozenset(b - t for b in m.bases if len(b & t) == best)
    return Matroid(tuple(e for e in m.ground if e not in t), fam)


def direct_sum(m: Matroid, other: Matroid) -> Matroid:
    """Direct sum of matroids on disjoint label sets."""
    if set(m.ground) & set(other.ground):
        raise OverlappingEmbedding(
            f"ground sets overlap: {m.ground} and {other.ground}"
        )
    ground = tuple(sorted(m.ground + other.ground))
    fam = frozenset(b1 | b2 for b1 in m.bases for b2 in other.bases)
    return Matroid(ground, fam)


def cyclic_shift(m: Matroid, a: int) -> Matroid:
    """Relabel element i to its representative of i - a + 1 modulo n."""
    if not m.is_standard():
        raise ElementOutOfRange("cyclic shift requires the standard ground set")
    n = m.n
    if not 1 <= a <= n:
        raise ShiftOutOfRange(f"shift {a} outside 1..{n}")
    return relabel(m, {i: (i - a) % n + 1 for i in m.ground})


def connected_components(m: Matroid) -> SetPartition:
    """Components under the single-exchange equivalence between bases.

    Loops and coloops end up as singleton blocks.
    """
    parent = {e: e for e in m.ground}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    bases = list(m.bases)
    for i, b1 in enumerate(bases):
        for b2 in bases[i + 1:]:
            d1 = b1 - b2
            if len(d1) == 1:
                (a,) = d1
                (b,) = b2 - b1
                union(a, b)
    blocks: dict[int, set[int]] = {}
    for e in m.ground:
        blocks.setdefault(find(e), set()).add(e)
    return make_partition(m.ground, blocks.values())


def is_connected(m: Matroid) -> bool:
    """Connected in the matroid sense; single-element matroids count."""
    return len(connected_components(m).blocks) <= 1
