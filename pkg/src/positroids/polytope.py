"""Positroid polytopes: inequality descriptions, faces, and the weighted
non-crossing labels of the face poset.

The polytope of a matroid is the convex hull of the 0/1 indicator vectors of
its bases.  For positroids it is cut out by cyclic-interval inequalities read
off the Grassmann necklace; for arbitrary matroids by the full rank function.
All arithmetic is exact (integers and fractions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .bijections import GrassmannNecklace, is_positroid
from .errors import InvalidFlag, NotAPositroid, SubsetBlowup
from .errors import BoundExceeded
from .matroid import (
    Matroid,
    SetPartition,
    connected_components,
    contract,
    direct_sum,
    make_partition,
    rank,
    restrict,
    standardize,
)
from .noncrossing import WeightedNCPartition, weighted_nc


def cyclic_interval(i: int, j: int, n: int) -> tuple[int, ...]:
    """The elements i, i+1, ..., j around the n-cycle, inclusive."""
    out = [i]
    x = i
    while x != j:
        x = x % n + 1
        out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class HDescription:
    """Sum-equals-d plus upper bounds on sums over cyclic intervals."""

    n: int
    d: int
    constraints: tuple[tuple[tuple[int, int], int], ...]

    def satisfied_by(self, subset: frozenset[int]) -> bool:
        if len(subset) != self.d:
            return False
        for (i, j), bound in self.constraints:
            if sum(1 for x in cyclic_interval(i, j, self.n) if x in subset) > bound:
                return False
        return True


@dataclass(frozen=True)
class RankDescription:
    """The exponential-size system: one bound per subset of the ground set."""

    n: int
    d: int
    constraints: tuple[tuple[frozenset[int], int], ...]

    def satisfied_by(self, subset: frozenset[int]) -> bool:
        if len(subset) != self.d:
            return False
        return all(len(subset & a) <= bound for a, bound in self.constraints)


def h_description(neck: GrassmannNecklace) -> HDescription:
    """Cyclic-interval inequalities carved from a Grassmann necklace."""
    n, d = neck.n, neck.d
    cons: list[tuple[tuple[int, int], int]] = []
    for j in range(1, n + 1):
        # nonnegativity of x_j, as the complementary interval bounded by d
        if n > 1:
            cons.append(((j % n + 1, (j - 2) % n + 1), d))
        ring = sorted(neck.rings[j - 1], key=lambda x: (x - j) % n)
        for k in range(1, d + 1):
            a = ring[k - 1]
            if a == j:
                continue
            cons.append(((j, (a - 2) % n + 1), k - 1))
    return HDescription(n, d, tuple(cons))


def rank_h_description(m: Matroid) -> RankDescription:
    """One inequality per subset: the x-sum over A is at most the rank of A."""
    m = standardize(m)
    if m.n > 12:
        raise SubsetBlowup(f"2^{m.n} subsets is past the guard at n=12")
    cons = []
    for r in range(1, m.n + 1):
        for a in combinations(range(1, m.n + 1), r):
            aset = frozenset(a)
            cons.append((aset, rank(m, aset)))
    return RankDescription(m.n, m.d, tuple(cons))


def cyclic_rank_description(m: Matroid) -> HDescription:
    """Only the cyclic-interval ranks of m; recovers m exactly when m is a
    positroid."""
    m = standardize(m)
    n = m.n
    cons = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            interval = frozenset(cyclic_interval(i, j, n))
            if len(interval) == n:
                continue
            cons.append(((i, j), rank(m, interval)))
    return HDescription(n, m.d, tuple(cons))


def vertices_01(desc) -> frozenset[frozenset[int]]:
    """All 0/1 points of the given description; they are its vertices."""
    return frozenset(
        frozenset(b)
        for b in combinations(range(1, desc.n + 1), desc.d)
        if desc.satisfied_by(frozenset(b))
    )


# ---------------------------------------------------------------------------
# faces


def face_for_flag(m: Matroid, layers) -> Matroid:
    """The face minimized by any functional constant on the layers and
    increasing across them: the direct sum of (m | prefix) / previous-prefix.
    """
    layers = [frozenset(a) for a in layers]
    if any(not a for a in layers):
        raise InvalidFlag("empty layer")
    seen: set[int] = set()
    for a in layers:
        if a & seen:
            raise InvalidFlag("layers overlap")
        seen |= a
    if seen != set(m.ground):
        raise InvalidFlag("layers do not cover the ground set")
    out = None
    prefix: frozenset[int] = frozenset()
    for a in layers:
        piece = contract(restrict(m, prefix | a), prefix)
        out = piece if out is None else direct_sum(out, piece)
        prefix = prefix | a
    return out


def _ordered_set_partitions(elems: tuple[int, ...]):
    if not elems:
        yield ()
        return
    first, rest = elems[0], elems[1:]
    for size in range(len(rest) + 1):
        for others in combinations(rest, size):
            block = frozenset((first,) + others)
            remaining = tuple(e for e in rest if e not in block)
            for tail in _ordered_set_partitions(remaining):
                # the new block can sit at any position among the tail blocks
                for pos in range(len(tail) + 1):
                    yield tail[:pos] + (block,) + tail[pos:]


@dataclass(frozen=True)
class FacePosetNode:
    matroid: Matroid | None  # None marks the empty face
    vertices: frozenset[frozenset[int]]
    label: WeightedNCPartition | None

    @property
    def is_empty(self) -> bool:
        return self.matroid is None


@dataclass(frozen=True)
class FacePoset:
    nodes: tuple[FacePosetNode, ...]

    def leq(self, a: FacePosetNode, b: FacePosetNode) -> bool:
        return a.vertices <= b.vertices

    @property
    def top(self) -> FacePosetNode:
        return max(self.nodes, key=lambda nd: len(nd.vertices))

    def __len__(self):
        return len(self.nodes)


def weighted_nc_of_face(f: Matroid, n: int | None = None) -> WeightedNCPartition:
    """Connected components of the face matroid, weighted by their ranks."""
    comps = connected_components(f)
    weights = {b: rank(f, b) for b in comps.block_sets()}
    return weighted_nc(n or f.n, comps.blocks, {frozenset(b): weights[b] for b in comps.blocks})


def face_poset(m: Matroid) -> FacePoset:
    """Every face of the polytope, found by sweeping all ordered set
    partitions of the ground set; deduplicated by vertex set."""
    m = standardize(m)
    if m.n > 6:
        raise BoundExceeded(f"face enumeration guarded at n=6, got n={m.n}")
    if not is_positroid(m):
        raise NotAPositroid(f"{m!r} is not a positroid")
    by_vertices: dict[frozenset[frozenset[int]], Matroid] = {}
    for layers in _ordered_set_partitions(m.ground):
        f = face_for_flag(m, layers)
        by_vertices.setdefault(f.bases, f)
    nodes = [
        FacePosetNode(f, verts, weighted_nc_of_face(f, m.n))
        for verts, f in by_vertices.items()
    ]
    nodes.append(FacePosetNode(None, frozenset(), None))
    nodes.sort(key=lambda nd: (len(nd.vertices), sorted(map(sorted, nd.vertices))))
    return FacePoset(tuple(nodes))


# ---------------------------------------------------------------------------
# dimension and the prefix-sum equivalence


def dimension(m: Matroid) -> int:
    """Dimension of the polytope: affine rank of the indicator vectors."""
    verts = [tuple(1 if e in b else 0 for e in m.ground) for b in m.bases]
    base = verts[0]
    rows = [[Fraction(v[i] - base[i]) for i in range(len(base))] for v in verts[1:]]
    return _matrix_rank(rows)


def _matrix_rank(rows: list[list[Fraction]]) -> int:
    rows = [row[:] for row in rows]
    rank_ = 0
    cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(cols):
        pivot = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        prow = rows[pivot_row]
        inv = 1 / prow[col]
        for r in range(pivot_row + 1, len(rows)):
            factor = rows[r][col] * inv
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], prow)]
        pivot_row += 1
        rank_ += 1
    return rank_


def pi_star(m: Matroid) -> SetPartition:
    """Group i with j when the difference of prefix counts |B ∩ [1,j]| -
    |B ∩ [1,i]| is the same for every basis B; for a positroid this is the
    Kreweras complement of the component partition."""
    m = standardize(m)
    bases = sorted(m.bases, key=lambda b: sorted(b))
    profiles: dict[int, tuple[int, ...]] = {}
    for i in m.ground:
        t = tuple(len([x for x in b if x <= i]) for b in bases)
        profiles[i] = tuple(x - t[0] for x in t)
    groups: dict[tuple[int, ...], set[int]] = {}
    for i, prof in profiles.items():
        groups.setdefault(prof, set()).add(i)
    return make_partition(m.ground, groups.values())
