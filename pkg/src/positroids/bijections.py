"""The compact positroid encodings and the maps between them.

Grassmann necklaces, decorated permutations, and Le-diagrams each determine a
positroid; the conversions here are mutually compatible, and ``envelope`` /
``is_positroid`` use the necklace characterization as the ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    BoundExceeded,
    MalformedDiagram,
    NotFound,
    OverlappingSupports,
    SizeMismatch,
)
from .matroid import Matroid, make_matroid, relabel, standardize

CW = "cw"
CCW = "ccw"


# ---------------------------------------------------------------------------
# types


@dataclass(frozen=True)
class GrassmannNecklace:
    """Sequence I_1, ..., I_n of d-subsets obeying the one-element update rule."""

    n: int
    d: int
    rings: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.rings) != self.n:
            raise SizeMismatch(f"expected {self.n} rings, got {len(self.rings)}")
        universe = set(range(1, self.n + 1))
        for ring in self.rings:
            if len(ring) != self.d or not ring <= universe:
                raise SizeMismatch(f"ring {sorted(ring)} is not a {self.d}-subset")
        for i in range(1, self.n + 1):
            cur = self.rings[i - 1]
            nxt = self.rings[i % self.n]
            if i not in cur:
                if nxt != cur:
                    raise SizeMismatch(f"ring {i + 1} changed although {i} is absent")
            else:
                if not cur - {i} <= nxt:
                    raise SizeMismatch(f"ring {i + 1} is not a one-element update")


@dataclass(frozen=True)
class DecoratedPermutation:
    """A bijection of its domain with cw/ccw colors on the fixed points."""

    domain: tuple[int, ...]
    targets: tuple[int, ...]
    colors: tuple[tuple[int, str], ...] = ()

    def __post_init__(self):
        if set(self.targets) != set(self.domain) or len(self.targets) != len(self.domain):
            raise SizeMismatch("targets are not a permutation of the domain")
        fixed = {a for a, b in zip(self.domain, self.targets) if a == b}
        colored = {e for e, _ in self.colors}
        if colored != fixed:
            raise SizeMismatch(f"colors on {sorted(colored)}, fixed points {sorted(fixed)}")
        if any(c not in (CW, CCW) for _, c in self.colors):
            raise SizeMismatch("colors must be 'cw' or 'ccw'")

    @property
    def n(self) -> int:
        return len(self.domain)

    def __call__(self, j: int) -> int:
        return self.targets[self.domain.index(j)]

    def color_of(self, j: int) -> str:
        return dict(self.colors)[j]

    def is_standard(self) -> bool:
        return self.domain == tuple(range(1, self.n + 1))


def decorated_perm(
    targets: Iterable[int],
    colors: Mapping[int, str] | None = None,
    domain: Iterable[int] | None = None,
) -> DecoratedPermutation:
    targets = tuple(targets)
    if domain is None:
        domain = tuple(range(1, len(targets) + 1))
    else:
        domain = tuple(domain)
    color_items = tuple(sorted((colors or {}).items()))
    return DecoratedPermutation(domain, targets, color_items)


@dataclass(frozen=True)
class LeDiagram:
    """A 0/+ filling of a Young diagram in the d x (n-d) box.

    ``shape`` lists the row lengths (weakly decreasing, zeros trimmed) and
    ``plus`` holds the (row, col) cells filled with +, 1-indexed from the
    top-left corner.
    """

    d: int
    n: int
    shape: tuple[int, ...]
    plus: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not 0 <= self.d <= self.n:
            raise MalformedDiagram(f"bad type ({self.d},{self.n})")
        lam = self.shape
        if len(lam) > self.d or any(x <= 0 for x in lam):
            raise MalformedDiagram(f"shape {lam} does not fit a height-{self.d} box")
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise MalformedDiagram(f"shape {lam} is not weakly decreasing")
        if lam and lam[0] > self.n - self.d:
            raise MalformedDiagram(f"shape {lam} wider than {self.n - self.d}")
        cells = {(i + 1, j) for i, row in enumerate(lam) for j in range(1, row + 1)}
        if not self.plus <= cells:
            raise MalformedDiagram("a + lies outside the shape")
        # the Gamma-property: no 0 with a + above it and a + to its left
        for (i, j) in cells - self.plus:
            above = any((r, j) in self.plus for r in range(1, i))
            left = any((i, c) in self.plus for c in range(1, j))
            if above and left:
                raise MalformedDiagram(f"cell ({i},{j}) violates the corner property")

    def row_lengths(self) -> tuple[int, ...]:
        """Shape padded with zeros to exactly d rows."""
        return self.shape + (0,) * (self.d - len(self.shape))

    def col_heights(self) -> tuple[int, ...]:
        lam = self.row_lengths()
        return tuple(sum(1 for x in lam if x >= c) for c in range(1, self.n - self.d + 1))


def le_diagram(d: int, n: int, shape: Iterable[int], plus: Iterable[tuple[int, int]]) -> LeDiagram:
    lam = tuple(x for x in shape if x > 0)
    return LeDiagram(d, n, lam, frozenset((i, j) for i, j in plus))


# ---------------------------------------------------------------------------
# Gale order and necklaces


def _rot(x: int, i: int, n: int) -> int:
    """Position of x in the rotated order i < i+1 < ... < i-1."""
    return (x - i) % n


def gale_leq(s: Iterable[int], t: Iterable[int], i: int, n: int) -> bool:
    """Componentwise comparison of sorted d-subsets in the i-rotated order."""
    s = sorted(s, key=lambda x: _rot(x, i, n))
    t = sorted(t, key=lambda x: _rot(x, i, n))
    if len(s) != len(t):
        raise SizeMismatch(f"subsets of sizes {len(s)} and {len(t)}")
    return all(_rot(a, i, n) <= _rot(b, i, n) for a, b in zip(s, t))


def necklace_of(m: Matroid) -> GrassmannNecklace:
    """I_k = lexicographically minimal basis in the k-rotated order."""
    m = standardize(m)
    n = m.n
    rings = []
    for k in range(1, n + 1):
        best = min(m.bases, key=lambda b: tuple(sorted(_rot(x, k, n) for x in b)))
        rings.append(frozenset(best))
    return GrassmannNecklace(n, m.d, tuple(rings))


def positroid_of_necklace(neck: GrassmannNecklace) -> Matroid:
    """All d-subsets that dominate every ring in its own Gale order."""
    n, d = neck.n, neck.d
    bases = [
        frozenset(b)
        for b in combinations(range(1, n + 1), d)
        if all(gale_leq(neck.rings[j - 1], b, j, n) for j in range(1, n + 1))
    ]
    return make_matroid(n, bases)


def envelope(m: Matroid) -> Matroid:
    """The smallest positroid whose bases contain those of m."""
    std = standardize(m)
    env = positroid_of_necklace(necklace_of(std))
    if std is m:
        return env
    back = {i + 1: e for i, e in enumerate(m.ground)}
    return relabel(env, back)


def is_positroid(m: Matroid) -> bool:
    return envelope(m).bases == m.bases


# ---------------------------------------------------------------------------
# necklaces <-> decorated permutations


def perm_of_necklace(neck: GrassmannNecklace) -> DecoratedPermutation:
    n = neck.n
    mapping: dict[int, int] = {}
    colors: dict[int, str] = {}
    for i in range(1, n + 1):
        cur = neck.rings[i - 1]
        nxt = neck.rings[i % n]
        if nxt == cur:
            if i in cur:
                mapping[i] = i
                colors[i] = CCW
            else:
                mapping[i] = i
                colors[i] = CW
        else:
            (j,) = nxt - cur
            mapping[j] = i
    return decorated_perm(tuple(mapping[j] for j in range(1, n + 1)), colors)


def necklace_of_perm(p: DecoratedPermutation) -> GrassmannNecklace:
    """I_k is the set of weak k-excedances of p."""
    if not p.is_standard():
        raise SizeMismatch("necklace conversion needs the standard domain 1..n")
    n = p.n
    color = dict(p.colors)
    rings = []
    for k in range(1, n + 1):
        ring = frozenset(
            j
            for j in range(1, n + 1)
            if (p(j) == j and color[j] == CCW)
            or (p(j) != j and _rot(j, k, n) < _rot(p(j), k, n))
        )
        rings.append(ring)
    return GrassmannNecklace(n, len(rings[0]), tuple(rings))


def weak_excedance_count(p: DecoratedPermutation) -> int:
    """Rank of the positroid encoded by p (independent of the base point)."""
    if not p.is_standard():
        raise SizeMismatch("weak excedances need the standard domain 1..n")
    color = dict(p.colors)
    n = p.n
    return sum(
        1
        for j in range(1, n + 1)
        if (p(j) == j and color[j] == CCW) or (p(j) != j and _rot(j, 1, n) < _rot(p(j), 1, n))
    )


def perm_direct_sum(p1: DecoratedPermutation, p2: DecoratedPermutation) -> DecoratedPermutation:
    """Union of two decorated permutations with disjoint supports."""
    if set(p1.domain) & set(p2.domain):
        raise OverlappingSupports(f"domains overlap: {p1.domain} and {p2.domain}")
    mapping = dict(zip(p1.domain, p1.targets))
    mapping.update(zip(p2.domain, p2.targets))
    domain = tuple(sorted(mapping))
    colors = dict(p1.colors)
    colors.update(dict(p2.colors))
    return decorated_perm(tuple(mapping[j] for j in domain), colors, domain)


def transport_perm(p: DecoratedPermutation, new_domain: Iterable[int]) -> DecoratedPermutation:
    """Order-preserving relabeling of the domain."""
    new_domain = tuple(sorted(new_domain))
    if len(new_domain) != p.n:
        raise SizeMismatch("domain size mismatch")
    to_new = dict(zip(sorted(p.domain), new_domain))
    mapping = {to_new[a]: to_new[b] for a, b in zip(p.domain, p.targets)}
    colors = {to_new[e]: c for e, c in p.colors}
    return decorated_perm(tuple(mapping[j] for j in new_domain), colors, new_domain)


# ---------------------------------------------------------------------------
# Le-diagrams: boundary labels and the pipe dream


def _border_labels(diag: LeDiagram) -> tuple[dict[int, int], dict[int, int]]:
    """Labels 1..n along the SE border, walked from the NE corner.

    Returns (vlabel, hlabel): the label of each row's east edge and of each
    column's south edge.
    """
    lam = diag.row_lengths()
    width = diag.n - diag.d
    vlabel: dict[int, int] = {}
    hlabel: dict[int, int] = {}
    k = 1
    for c in range(width, (lam[0] if lam else 0), -1):
        hlabel[c] = k
        k += 1
    for i in range(1, diag.d + 1):
        vlabel[i] = k
        k += 1
        low = lam[i] if i < diag.d else 0
        for c in range(lam[i - 1], low, -1):
            hlabel[c] = k
            k += 1
    return vlabel, hlabel


def perm_of_le(diag: LeDiagram) -> DecoratedPermutation:
    """Trace the pipe dream: elbows at +, crossings at 0."""
    lam = diag.row_lengths()
    heights = diag.col_heights()
    vlabel, hlabel = _border_labels(diag)
    plus = diag.plus

    def trace(r: int, c: int, heading: str) -> int:
        while True:
            if heading == "e":
                if c > lam[r - 1]:
                    return vlabel[r]
                if (r, c) in plus:
                    heading = "s"
                    r += 1
                else:
                    c += 1
            else:
                if r > heights[c - 1]:
                    return hlabel[c]
                if (r, c) in plus:
                    heading = "e"
                    c += 1
                else:
                    r += 1

    mapping: dict[int, int] = {}
    colors: dict[int, str] = {}
    for i in range(1, diag.d + 1):
        if lam[i - 1] == 0:
            mapping[vlabel[i]] = vlabel[i]
            colors[vlabel[i]] = CCW
        else:
            mapping[vlabel[i]] = trace(i, 1, "e")
    for c in range(1, diag.n - diag.d + 1):
        if heights[c - 1] == 0:
            mapping[hlabel[c]] = hlabel[c]
            colors[hlabel[c]] = CW
        else:
            mapping[hlabel[c]] = trace(1, c, "s")
    # a pipe that never turns is a fixed point on two like edges
    for j, t in mapping.items():
        if j == t and j not in colors:
            colors[j] = CCW if j in vlabel.values() else CW
    return decorated_perm(tuple(mapping[j] for j in range(1, diag.n + 1)), colors)


def _partitions_in_box(rows: int, cols: int):
    """All weakly decreasing shapes inside a rows x cols box (zeros trimmed)."""

    def rec(maxpart: int, remaining_rows: int):
        yield ()
        if remaining_rows == 0:
            return
        for first in range(maxpart, 0, -1):
            for rest in rec(first, remaining_rows - 1):
                yield (first,) + rest

    yield from rec(cols, rows)


def le_diagrams(d: int, n: int):
    """All Le-diagrams of type (d, n), by backtracking over valid fillings."""
    for lam in _partitions_in_box(d, n - d):
        cells = [(i + 1, j) for i, row in enumerate(lam) for j in range(1, row + 1)]
        cells.sort()

        def fill(idx: int, plus: set[tuple[int, int]], has_left: dict, has_above: dict):
            if idx == len(cells):
                yield LeDiagram(d, n, lam, frozenset(plus))
                return
            i, j = cells[idx]
            # 0 is allowed unless it would sit SE of two +'s
            if not (has_above.get(j, 0) and has_left.get(i, 0)):
                yield from fill(idx + 1, plus, has_left, has_above)
            plus.add((i, j))
            has_left2 = dict(has_left)
            has_left2[i] = has_left2.get(i, 0) + 1
            has_above2 = dict(has_above)
            has_above2[j] = has_above2.get(j, 0) + 1
            yield from fill(idx + 1, plus, has_left2, has_above2)
            plus.remove((i, j))

        # rows are filled in order, so left/above counters track the prefix;
        # has_left is keyed by row, has_above by column
        yield from fill(0, set(), {}, {})


def le_of_perm(p: DecoratedPermutation, bound: int = 8) -> LeDiagram:
    """Invert the pipe dream by searching all diagrams of the right type."""
    if p.n > bound:
        raise BoundExceeded(f"n={p.n} exceeds the search bound {bound}")
    if not p.is_standard():
        raise SizeMismatch("diagram search needs the standard domain 1..n")
    d = weak_excedance_count(p)
    for diag in le_diagrams(d, p.n):
        if perm_of_le(diag) == p:
            return diag
    raise NotFound(f"no Le-diagram maps to {p}")
