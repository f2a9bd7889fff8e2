"""Matroid core: construction validation and the basic operations."""

from fractions import Fraction
from itertools import combinations

import pytest

from positroids import (
    connected_components,
    contract,
    cyclic_shift,
    direct_sum,
    dual,
    is_connected,
    is_positroid,
    make_matroid,
    matroid_on,
    rank,
    restrict,
    uniform,
)
from positroids.counting import enumerate_positroids
from positroids.errors import (
    ElementOutOfRange,
    EmptyBases,
    ExchangeViolation,
    OverlappingEmbedding,
    ShiftOutOfRange,
    UnequalCardinality,
)
from positroids.matroid import empty_matroid


class TestConstruction:
    def test_uniform_accepted(self):
        m = uniform(2, 4)
        assert len(m.bases) == 6 and m.d == 2

    def test_exchange_violation_with_witness(self):
        with pytest.raises(ExchangeViolation) as exc:
            make_matroid(4, [{1, 2}, {3, 4}])
        assert exc.value.element in exc.value.b1

    def test_square_pyramid_accepted(self, m0):
        assert m0.d == 2 and m0.n == 4

    def test_empty_bases(self):
        with pytest.raises(EmptyBases):
            make_matroid(3, [])

    def test_unequal_cardinality(self):
        with pytest.raises(UnequalCardinality):
            make_matroid(3, [{1}, {1, 2}])

    def test_out_of_range(self):
        with pytest.raises(ElementOutOfRange):
            make_matroid(3, [{1, 4}])


class TestRank:
    def test_pyramid_pair(self, m0):
        assert rank(m0, {3, 4}) == 1

    def test_empty_set(self, m0):
        assert rank(m0, set()) == 0

    def test_full_ground(self, m0):
        assert rank(m0, {1, 2, 3, 4}) == m0.d

    def test_out_of_range(self, m0):
        with pytest.raises(ElementOutOfRange):
            rank(m0, {5})


class TestDual:
    def test_self_dual_uniform(self):
        assert dual(uniform(2, 4)).bases == uniform(2, 4).bases

    def test_involution(self, m0):
        assert dual(dual(m0)) == m0

    def test_pyramid_dual(self, m0):
        want = {frozenset(b) for b in [(3, 4), (2, 4), (2, 3), (1, 4), (1, 3)]}
        assert dual(m0).bases == want


class TestRestrictContract:
    def test_restrict_pair(self, m0):
        assert restrict(m0, {1, 2}).bases == frozenset({frozenset({1, 2})})

    def test_restrict_identity(self, m0):
        assert restrict(m0, {1, 2, 3, 4}) == m0

    def test_restrict_uniform(self):
        r = restrict(uniform(2, 4), {1, 2})
        assert r.bases == frozenset({frozenset({1, 2})})

    def test_contract_element(self, m0):
        c = contract(m0, {1})
        assert c.ground == (2, 3, 4)
        assert c.bases == frozenset(frozenset({x}) for x in (2, 3, 4))

    def test_contract_nothing(self, m0):
        assert contract(m0, set()) == m0

    def test_contract_uniform(self):
        c = contract(uniform(2, 4), {4})
        assert c.ground == (1, 2, 3)
        assert c.bases == frozenset(frozenset({x}) for x in (1, 2, 3))

    def test_minor_duality_identity(self):
        # (M/S)* = M* restricted to the complement, for every small matroid
        for n in range(1, 5):
            for m in enumerate_positroids(n):
                for r in range(n + 1):
                    for s in combinations(range(1, n + 1), r):
                        s = frozenset(s)
                        rest = frozenset(m.ground) - s
                        if not rest:
                            continue
                        left = dual(contract(m, s))
                        right = restrict(dual(m), rest)
                        assert left.bases == right.bases


class TestDirectSum:
    def test_two_segments(self):
        a = matroid_on({1, 2}, [{1}, {2}])
        b = matroid_on({3, 4}, [{3}, {4}])
        s = direct_sum(a, b)
        assert s.bases == frozenset(
            frozenset(p) for p in [(1, 3), (1, 4), (2, 3), (2, 4)]
        )

    def test_identity(self, m0):
        assert direct_sum(m0, empty_matroid()) == m0

    def test_coloop_loop(self):
        a = matroid_on({1}, [{1}])
        b = matroid_on({2}, [set()])
        s = direct_sum(a, b)
        assert s.bases == frozenset({frozenset({1})})

    def test_overlap_rejected(self, m0):
        with pytest.raises(OverlappingEmbedding):
            direct_sum(m0, m0)


class TestCyclicShift:
    def test_shift_by_one_fixed(self, m0):
        assert cyclic_shift(m0, 1) == m0

    def test_full_cycle(self, m0):
        m = m0
        for _ in range(4):
            m = cyclic_shift(m, 2)
        # shifting by 2 four times is shifting by 4 (mod 4) twice = identity
        assert m == m0

    def test_preserves_positroid(self, m0):
        assert is_positroid(cyclic_shift(m0, 2))

    def test_out_of_range(self, m0):
        with pytest.raises(ShiftOutOfRange):
            cyclic_shift(m0, 5)


class TestComponents:
    def test_uniform_connected(self):
        assert connected_components(uniform(2, 4)).blocks == (
            frozenset({1, 2, 3, 4}),
        )

    def test_pyramid_connected(self, m0):
        assert is_connected(m0)

    def test_direct_sum_blocks(self):
        m = make_matroid(4, [{1, 3}, {1, 4}, {2, 3}, {2, 4}])
        assert connected_components(m).block_sets() == frozenset(
            {frozenset({1, 2}), frozenset({3, 4})}
        )

    def test_sum_refines(self, m0):
        other = matroid_on({5, 6}, [{5}, {6}])
        s = direct_sum(m0, other)
        blocks = connected_components(s).block_sets()
        assert frozenset({5, 6}) in blocks and frozenset({1, 2, 3, 4}) in blocks


# ---------------------------------------------------------------------------
# polytope edge structure: edges of the basis hull are single exchanges


def _in_hull(point, others):
    """Exact membership of a rational point in the convex hull of 0/1 points,
    by trying every support of size at most dim+1."""
    if not others:
        return False
    dim = len(point)
    for size in range(1, min(len(others), dim + 1) + 1):
        for support in combinations(others, size):
            if _solve_combination(point, support):
                return True
    return False


def _solve_combination(point, support):
    # solve sum l_i v_i = point, sum l_i = 1, l_i >= 0 exactly
    rows = [[Fraction(v[j]) for v in support] + [Fraction(point[j])] for j in range(len(point))]
    rows.append([Fraction(1)] * len(support) + [Fraction(1)])
    k = len(support)
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [x / rows[r][c] for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][-1]:
            return False  # inconsistent
    if len(pivots) < k:
        return False  # underdetermined; a larger support run will catch it
    sol = [rows[i][-1] for i in range(k)]
    return all(x >= 0 for x in sol)


def _hull_edges(bases, n):
    verts = {b: tuple(1 if e in b else 0 for e in range(1, n + 1)) for b in bases}
    edges = set()
    blist = sorted(bases, key=sorted)
    for u, v in combinations(blist, 2):
        mid = tuple(Fraction(a + b, 2) for a, b in zip(verts[u], verts[v]))
        rest = [verts[w] for w in blist if w not in (u, v)]
        if not _in_hull(mid, rest):
            edges.add(frozenset({u, v}))
    return edges


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hull_edges_are_single_exchanges(n):
    for m in enumerate_positroids(n):
        if len(m.bases) < 2:
            continue
        exchange_pairs = {
            frozenset({b1, b2})
            for b1, b2 in combinations(m.bases, 2)
            if len(b1 - b2) == 1
        }
        assert _hull_edges(m.bases, n) == exchange_pairs
