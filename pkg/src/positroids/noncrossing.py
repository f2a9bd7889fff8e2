"""Non-crossing partitions, Kreweras complements, and weighted refinement.

Every connected-component partition of a positroid is non-crossing, and the
direct sum over the blocks of any non-crossing partition is again a positroid;
these facts drive the decomposition functions here.  The weighted poset
(non-crossing partitions of [n] carrying nonnegative integer block weights with
a fixed total) hosts the face-poset embedding computed in the polytope module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .bijections import DecoratedPermutation, is_positroid
from .errors import (
    BlocksCross,
    CrossingComponents,
    FactorNotConnected,
    FactorNotPositroid,
    MismatchedType,
)
from .errors import NotAPositroid
from .matroid import (
    Matroid,
    SetPartition,
    connected_components,
    direct_sum,
    is_connected,
    make_partition,
    standardize,
)


def _blocks_cross(b1: Iterable[int], b2: Iterable[int]) -> bool:
    """Do two disjoint blocks cross in the cyclic order on [n]?

    b1 and b2 cross iff some a < b < c < d (in the linear order, which
    suffices up to swapping roles) has a, c in one block and b, d in the
    other.
    """
    for a, c in combinations(sorted(b1), 2):
        for b, d in combinations(sorted(b2), 2):
            if a < b < c < d or b < a < d < c:
                return True
    return False


def is_noncrossing(p: SetPartition) -> bool:
    blocks = p.blocks
    for i, b1 in enumerate(blocks):
        for b2 in blocks[i + 1:]:
            if _blocks_cross(b1, b2):
                return False
    return True


@dataclass(frozen=True)
class NonCrossingPartition:
    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        part = make_partition(range(1, self.n + 1), self.blocks)
        if not is_noncrossing(part):
            raise BlocksCross(f"partition {[sorted(b) for b in self.blocks]} crosses")

    def as_set_partition(self) -> SetPartition:
        return make_partition(range(1, self.n + 1), self.blocks)

    def block_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(self.blocks)


def make_nc(n: int, blocks: Iterable[Iterable[int]]) -> NonCrossingPartition:
    canon = tuple(sorted((frozenset(b) for b in blocks), key=min))
    return NonCrossingPartition(n, canon)


@dataclass(frozen=True)
class WeightedNCPartition:
    """A non-crossing partition whose i-th block carries weight weights[i]."""

    partition: NonCrossingPartition
    weights: tuple[int, ...]

    def __post_init__(self):
        blocks = self.partition.blocks
        if len(self.weights) != len(blocks):
            raise MismatchedType("one weight per block required")
        for w, b in zip(self.weights, blocks):
            if not 0 <= w <= len(b):
                raise MismatchedType(f"weight {w} outside 0..{len(b)}")

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def d(self) -> int:
        return sum(self.weights)

    def weight_map(self) -> dict[frozenset[int], int]:
        return dict(zip(self.partition.blocks, self.weights))


def weighted_nc(n: int, blocks: Iterable[Iterable[int]], weights: Iterable[int] | dict) -> WeightedNCPartition:
    nc = make_nc(n, blocks)
    if isinstance(weights, dict):
        weights = [weights[b] for b in nc.blocks]
    return WeightedNCPartition(nc, tuple(weights))


# ---------------------------------------------------------------------------
# positroids <-> non-crossing partitions


def nc_of_positroid(m: Matroid) -> NonCrossingPartition:
    """The connected components of a positroid, as a non-crossing partition."""
    if not m.is_standard():
        m = standardize(m)
    if not is_positroid(m):
        raise NotAPositroid(f"{m!r} is not a positroid")
    comps = connected_components(m)
    if not is_noncrossing(comps):
        raise CrossingComponents(f"components {comps.blocks} cross")
    return make_nc(m.n, comps.blocks)


def positroid_from_nc(p: NonCrossingPartition, factors: Sequence[Matroid]) -> Matroid:
    """Direct sum of connected positroid factors placed on the blocks of p."""
    if len(factors) != len(p.blocks):
        raise MismatchedType("one factor per block required")
    total = None
    for block, factor in zip(p.blocks, factors):
        if set(factor.ground) != set(block):
            raise MismatchedType(
                f"factor on {factor.ground} does not match block {sorted(block)}"
            )
        if not is_connected(factor):
            raise FactorNotConnected(f"factor on {sorted(block)} is disconnected")
        if not is_positroid(factor):
            raise FactorNotPositroid(f"factor on {sorted(block)} is not a positroid")
        total = factor if total is None else direct_sum(total, factor)
    return total


def finest_nc_of_perm(p: DecoratedPermutation) -> NonCrossingPartition:
    """Finest non-crossing partition joining each i to its image.

    Starts from the orbit partition and merges crossing pairs of blocks until
    none remain; the non-crossing closure is unique, so the merge order is
    immaterial.
    """
    blocks: list[set[int]] = []
    seen: set[int] = set()
    for j in p.domain:
        if j in seen:
            continue
        orbit = {j}
        x = p(j)
        while x != j:
            orbit.add(x)
            x = p(x)
        seen |= orbit
        blocks.append(orbit)
    merged = True
    while merged:
        merged = False
        for i in range(len(blocks)):
            for k in range(i + 1, len(blocks)):
                if _blocks_cross(blocks[i], blocks[k]):
                    blocks[i] |= blocks.pop(k)
                    merged = True
                    break
            if merged:
                break
    return make_nc(p.n, blocks)


# ---------------------------------------------------------------------------
# Kreweras complement


def kreweras(p: NonCrossingPartition) -> NonCrossingPartition:
    """Coarsest partition interleaving with p on the nodes 1,1',...,n,n'.

    Uses the cycle formula: if s sends each element to the next member of its
    block (cyclically, in increasing order) and c is the long cycle
    1 -> 2 -> ... -> n -> 1, the complement's blocks are the cycles of
    s^{-1} after c.
    """
    n = p.n
    nxt: dict[int, int] = {}
    for b in p.blocks:
        elems = sorted(b)
        for i, e in enumerate(elems):
            nxt[e] = elems[(i + 1) % len(elems)]
    prv = {v: k for k, v in nxt.items()}
    blocks = []
    seen: set[int] = set()
    for start in range(1, n + 1):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = prv[x % n + 1]
        blocks.append(cyc)
    return make_nc(n, blocks)


def interleaved_noncrossing(p: NonCrossingPartition, q: NonCrossingPartition) -> bool:
    """Is the union of p (on 1..n) and q (on primed 1'..n') non-crossing
    around the circle 1, 1', 2, 2', ..., n, n'?
    """
    if p.n != q.n:
        raise MismatchedType("partitions of different circles")
    blocks = [frozenset(2 * e - 1 for e in b) for b in p.blocks]
    blocks += [frozenset(2 * e for e in b) for b in q.blocks]
    for i, b1 in enumerate(blocks):
        for b2 in blocks[i + 1:]:
            if _blocks_cross(b1, b2):
                return False
    return True


# ---------------------------------------------------------------------------
# SIF permutations


def is_sif(p: DecoratedPermutation) -> bool:
    """True when no proper contiguous interval of 1..n is stabilized."""
    n = p.n
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if j - i + 1 == n:
                continue
            interval = set(range(i, j + 1))
            if {p(x) for x in interval} == interval:
                return False
    return True


# ---------------------------------------------------------------------------
# the weighted refinement order


def ncd_covers(a: WeightedNCPartition, b: WeightedNCPartition) -> bool:
    """b covers a: a splits exactly one block of b, weights adding up."""
    if a.n != b.n or a.d != b.d:
        raise MismatchedType("comparisons need equal n and equal total weight")
    wa, wb = a.weight_map(), b.weight_map()
    extra_a = set(wa) - set(wb)
    extra_b = set(wb) - set(wa)
    if len(extra_a) != 2 or len(extra_b) != 1:
        return False
    if any(wa[s] != wb[s] for s in set(wa) & set(wb)):
        return False
    (big,) = extra_b
    s1, s2 = extra_a
    return s1 | s2 == big and wa[s1] + wa[s2] == wb[big]


def ncd_leq(a: WeightedNCPartition, b: WeightedNCPartition) -> bool:
    """Reflexive-transitive closure of the cover relation, in closed form:
    a refines b blockwise and each block of b carries the sum of the weights
    of the a-blocks inside it.
    """
    if a.n != b.n or a.d != b.d:
        raise MismatchedType("comparisons need equal n and equal total weight")
    wa = a.weight_map()
    for big in b.partition.blocks:
        inside = [s for s in a.partition.blocks if s <= big]
        if sum(len(s) for s in inside) != len(big):
            return False
        if sum(wa[s] for s in inside) != b.weight_map()[big]:
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration


def noncrossing_partitions(n: int):
    """All non-crossing partitions of [n], via the block-of-1 recursion."""
    for blocks in _nc_blocks(tuple(range(1, n + 1))):
        yield make_nc(n, blocks)


def _nc_blocks(elems: tuple[int, ...]):
    """Block lists of all non-crossing partitions of an ordered tuple."""
    if not elems:
        yield ()
        return
    first, rest = elems[0], elems[1:]
    for size in range(len(rest) + 1):
        for others in combinations(rest, size):
            block = (first,) + others
            prev = first
            gap_lists = []
            for cut in list(others) + [None]:
                gap = tuple(e for e in rest if prev < e and (cut is None or e < cut))
                gap_lists.append(list(_nc_blocks(gap)))
                if cut is not None:
                    prev = cut
            for choice in product(*gap_lists):
                out = (tuple(block),)
                for c in choice:
                    out += c
                yield out


def weighted_noncrossing_partitions(n: int, d: int):
    """All weighted non-crossing partitions of [n] with total weight d."""
    for p in noncrossing_partitions(n):
        sizes = [len(b) for b in p.blocks]
        for weights in _weight_vectors(sizes, d):
            yield WeightedNCPartition(p, weights)


def _weight_vectors(sizes: list[int], total: int):
    if not sizes:
        if total == 0:
            yield ()
        return
    first, rest = sizes[0], sizes[1:]
    for w in range(min(first, total) + 1):
        for tail in _weight_vectors(rest, total - w):
            yield (w,) + tail
