"""Exhaustive desk-scale verification suites.

Each check returns (ok, detail).  The CLI's verify command and the acceptance
tests both run these, so there is exactly one implementation of each claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial

from . import bijections as bj
from . import counting as ct
from . import noncrossing as nc
from . import plabic as pl
from . import polytope as pt
from .errors import UnknownSuite
from .matroid import (
    connected_components,
    is_connected,
    make_matroid,
    matroid_on,
    standardize,
)

P_SEQUENCE = (2, 5, 16, 65, 326, 1957, 13700)
PC_SEQUENCE = (2, 1, 2, 7, 34, 206, 1476)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks
            ],
        }


# ---------------------------------------------------------------------------
# counts


def check_positroid_counts(bound: int = 6) -> CheckResult:
    bound = min(bound, 7)
    got = [sum(1 for _ in ct.enumerate_positroids(n)) for n in range(1, bound + 1)]
    want = list(P_SEQUENCE[:bound])
    return CheckResult(
        "positroid counts",
        got == want,
        f"n=1..{bound}: {got} (expected {want})",
    )


def check_connected_counts(bound: int = 7) -> CheckResult:
    bound = min(bound, 7)
    want = list(PC_SEQUENCE[:bound])
    sif = [2] + [ct.count_connected_bruteforce(n) for n in range(2, bound + 1)]
    comp = [ct.count_connected_by_components(n) for n in range(1, bound + 1)]
    rec = [ct.pc_count(n) for n in range(1, bound + 1)]
    ok = sif == want and comp == want and rec == want
    return CheckResult(
        "connected counts",
        ok,
        f"sif={sif} components={comp} recurrence={rec} expected={want}",
    )


def check_lagrange(bound: int = 8) -> CheckResult:
    bad = [n for n in range(2, bound + 1) if not ct.lagrange_check(n)]
    return CheckResult(
        "Lagrange inversion",
        not bad,
        f"n=2..{bound}: {'all match' if not bad else f'mismatch at {bad}'}",
    )


# ---------------------------------------------------------------------------
# bijections


def check_perm_necklace_roundtrip(bound: int = 6) -> CheckResult:
    for n in range(1, bound + 1):
        for p in ct.decorated_permutations(n):
            neck = bj.necklace_of_perm(p)
            if bj.perm_of_necklace(neck) != p:
                return CheckResult(
                    "perm/necklace round trip", False, f"fails at n={n}, {p}"
                )
    return CheckResult("perm/necklace round trip", True, f"all decorated perms, n<={bound}")


def check_le_bijection(bound: int = 5) -> CheckResult:
    for n in range(1, bound + 1):
        seen = {}
        total = 0
        for d in range(n + 1):
            for diag in bj.le_diagrams(d, n):
                total += 1
                p = bj.perm_of_le(diag)
                if bj.weak_excedance_count(p) != d:
                    return CheckResult(
                        "Le-diagram bijection", False, f"rank mismatch at n={n}: {diag}"
                    )
                if p in seen:
                    return CheckResult(
                        "Le-diagram bijection", False, f"not injective at n={n}: {p}"
                    )
                seen[p] = diag
                if bj.le_of_perm(p) != diag:
                    return CheckResult(
                        "Le-diagram bijection", False, f"inverse fails at n={n}: {p}"
                    )
        if total != ct.p_count(n):
            return CheckResult(
                "Le-diagram bijection",
                False,
                f"count {total} != p({n}) = {ct.p_count(n)}",
            )
    return CheckResult("Le-diagram bijection", True, f"injective two-sided inverse, n<={bound}")


def check_envelope_properties(bound: int = 5) -> CheckResult:
    for n in range(1, bound + 1):
        for m in ct.enumerate_positroids(n):
            if not bj.is_positroid(m):
                return CheckResult("envelope", False, f"enumerated non-positroid {m!r}")
            env = bj.envelope(m)
            if env.bases != m.bases:
                return CheckResult("envelope", False, f"not idempotent on {m!r}")
    # U_{1,2} on {1,3} direct-sum U_{1,2} on {2,4}: crossing blocks, not a positroid
    crossing = make_matroid(4, [{1, 2}, {1, 4}, {2, 3}, {3, 4}])
    env = bj.envelope(crossing)
    if env.bases != frozenset(frozenset(b) for b in combinations(range(1, 5), 2)):
        return CheckResult("envelope", False, "crossing direct sum does not close to U_{2,4}")
    return CheckResult("envelope", True, f"idempotent on all positroids n<={bound}")


# ---------------------------------------------------------------------------
# plabic


def _all_le_diagrams(n: int):
    for d in range(n + 1):
        yield from bj.le_diagrams(d, n)


def check_plabic_pipeline(bound: int = 5) -> CheckResult:
    for n in range(1, bound + 1):
        for diag in _all_le_diagrams(n):
            p = bj.perm_of_le(diag)
            g = pl.plabic_of_le(diag)
            if pl.trip_perm(g) != p:
                return CheckResult(
                    "plabic pipeline", False, f"trip mismatch for {diag} (expected {p})"
                )
            expected = bj.positroid_of_necklace(bj.necklace_of_perm(p))
            orientations = pl.enumerate_perfect_orientations(g)
            sources = frozenset(o.source_set for o in orientations)
            if sources != expected.bases:
                return CheckResult(
                    "plabic pipeline", False, f"orientation sources differ for {diag}"
                )
            canon = pl.canonical_orientation(g)
            if canon.source_set not in expected.bases:
                return CheckResult(
                    "plabic pipeline", False, f"canonical source not a basis for {diag}"
                )
            flows = pl.bases_via_flows(g, canon)
            if flows != expected.bases:
                return CheckResult(
                    "plabic pipeline", False, f"flow bases differ for {diag}"
                )
            src = canon.source_set
            for i in src:
                for j in set(range(1, n + 1)) - src:
                    via_path = pl.exchange_via_path(g, canon, i, j)
                    member = (src - {i}) | {j} in expected.bases
                    if via_path != member:
                        return CheckResult(
                            "plabic pipeline",
                            False,
                            f"path exchange disagrees for {diag} at ({i},{j})",
                        )
    return CheckResult("plabic pipeline", True, f"trips/orientations/flows/paths agree, n<={bound}")


# ---------------------------------------------------------------------------
# polytope


def check_polytope_descriptions(bound: int = 5) -> CheckResult:
    for n in range(1, bound + 1):
        for m in ct.enumerate_positroids(n):
            neck = bj.necklace_of(m)
            v1 = pt.vertices_01(pt.h_description(neck))
            v2 = pt.vertices_01(pt.rank_h_description(m))
            v3 = pt.vertices_01(pt.cyclic_rank_description(m))
            if not (v1 == v2 == v3 == m.bases):
                return CheckResult(
                    "polytope descriptions", False, f"descriptions disagree on {m!r}"
                )
    witness = make_matroid(4, [{1, 2}, {1, 4}, {2, 3}, {3, 4}])
    recovered = pt.vertices_01(pt.cyclic_rank_description(witness))
    if recovered == witness.bases:
        return CheckResult(
            "polytope descriptions", False, "cyclic intervals wrongly recover a non-positroid"
        )
    return CheckResult(
        "polytope descriptions", True, f"three descriptions agree on all positroids n<={bound}"
    )


def check_dimension_formula(bound: int = 6) -> CheckResult:
    for n in range(1, bound + 1):
        for m in ct.enumerate_positroids(n):
            c = len(connected_components(m).blocks)
            if pt.dimension(m) != n - c:
                return CheckResult(
                    "dimension formula", False, f"dim != n - c on {m!r}"
                )
    return CheckResult("dimension formula", True, f"dim = n - c for all positroids n<={bound}")


def check_face_embedding(bound: int = 5) -> CheckResult:
    for n in range(1, bound + 1):
        for m in ct.enumerate_positroids(n):
            poset = pt.face_poset(m)
            real = [nd for nd in poset.nodes if not nd.is_empty]
            labels = {}
            for nd in real:
                if not bj.is_positroid(nd.matroid):
                    return CheckResult(
                        "face poset embedding", False, f"non-positroid face of {m!r}"
                    )
                key = (nd.label.partition.blocks, nd.label.weights)
                if key in labels:
                    return CheckResult(
                        "face poset embedding", False, f"label collision on {m!r}"
                    )
                labels[key] = nd
            for a in real:
                for b in real:
                    if poset.leq(a, b) != nc.ncd_leq(a.label, b.label):
                        return CheckResult(
                            "face poset embedding",
                            False,
                            f"order not induced on {m!r}",
                        )
    return CheckResult(
        "face poset embedding", True, f"injective induced embedding, all positroids n<={bound}"
    )


# ---------------------------------------------------------------------------
# non-crossing


def check_components_noncrossing(bound: int = 6) -> CheckResult:
    for n in range(1, bound + 1):
        for m in ct.enumerate_positroids(n):
            if not nc.is_noncrossing(connected_components(m)):
                return CheckResult(
                    "components non-crossing", False, f"crossing components on {m!r}"
                )
    return CheckResult("components non-crossing", True, f"all positroids n<={bound}")


def check_nc_converse(bound: int = 5, sample_cap: int = 10_000) -> CheckResult:
    """Direct sums of connected positroids over non-crossing blocks are
    positroids."""
    import random

    rng = random.Random(20260823)
    for n in range(1, bound + 1):
        connected = {
            k: [standardize(m) for m in ct.enumerate_positroids(k) if is_connected(m)]
            for k in range(1, n + 1)
        }
        for part in nc.noncrossing_partitions(n):
            sizes = [len(b) for b in part.blocks]
            total = 1
            for s in sizes:
                total *= len(connected[s])
            if total <= sample_cap:
                assignments = product(*(connected[s] for s in sizes))
            else:
                assignments = (
                    tuple(rng.choice(connected[s]) for s in sizes) for _ in range(200)
                )
            for factors in assignments:
                placed = []
                for block, factor in zip(part.blocks, factors):
                    mapping = {
                        i + 1: e for i, e in enumerate(sorted(block))
                    }
                    placed.append(
                        matroid_on(block, [
                            frozenset(mapping[x] for x in b) for b in factor.bases
                        ])
                    )
                total_m = nc.positroid_from_nc(part, placed)
                if not bj.is_positroid(total_m):
                    return CheckResult(
                        "non-crossing converse",
                        False,
                        f"direct sum not a positroid for {part} at n={n}",
                    )
    return CheckResult("non-crossing converse", True, f"all block assignments, n<={bound}")


def check_kreweras(bound: int = 6) -> CheckResult:
    for n in range(1, bound + 1):
        for m in ct.enumerate_positroids(n):
            pi = nc.nc_of_positroid(m)
            kw = nc.kreweras(pi)
            if pt.pi_star(m).block_sets() != kw.block_sets():
                return CheckResult(
                    "Kreweras identity", False, f"pi* != K(Pi) on {m!r}"
                )
    return CheckResult("Kreweras identity", True, f"all positroids n<={bound}")


def check_kreweras_coarsest(bound: int = 6) -> CheckResult:
    """The computed complement is the unique coarsest partition keeping the
    interleaved picture non-crossing."""
    for n in range(1, bound + 1):
        for p in nc.noncrossing_partitions(n):
            k = nc.kreweras(p)
            if not nc.interleaved_noncrossing(p, k):
                return CheckResult("Kreweras coarsest", False, f"K({p}) crosses p")
            for q in nc.noncrossing_partitions(n):
                if not nc.interleaved_noncrossing(p, q):
                    continue
                # every compatible partition must refine the complement
                refines = all(
                    any(b <= kb for kb in k.blocks) for b in q.blocks
                )
                if not refines:
                    return CheckResult(
                        "Kreweras coarsest", False, f"{q} compatible but not below K({p})"
                    )
    return CheckResult("Kreweras coarsest", True, f"exhaustive, n<={bound}")


# ---------------------------------------------------------------------------
# free probability and limits


def check_freeprob(bound: int = 8) -> CheckResult:
    p_seq = ct.p_sequence(bound)
    pc_seq = ct.pc_sequence(bound)
    for n in range(1, bound + 1):
        if ct.nc_transform(pc_seq, n) != p_seq.value(n):
            return CheckResult("moment transform", False, f"nc_transform fails at n={n}")
    cums = ct.free_cumulants_from_moments(p_seq, bound)
    if cums.values != pc_seq.values:
        return CheckResult(
            "moment transform", False, f"cumulants {cums.values} != {pc_seq.values}"
        )
    for n in range(0, 11):
        expected = ct.p_count(n) if n >= 1 else 1
        if ct.shifted_exp_moment(n) != expected:
            return CheckResult("moment transform", False, f"moment fails at n={n}")
    return CheckResult("moment transform", True, f"round trips and moments agree, n<={bound}")


def _e_rational() -> Fraction:
    return sum((Fraction(1, factorial(k)) for k in range(26)), Fraction(0))


def check_limits() -> CheckResult:
    e = _e_rational()
    gap = abs(Fraction(ct.p_count(7), factorial(7)) - e)
    # the truncation error of the e approximation is far below 1e-7
    if gap >= Fraction(4, 10**5):
        return CheckResult("limit checks", False, f"|p(7)/7! - e| = {float(gap)}")
    ratios = [Fraction(ct.pc_count(n), ct.p_count(n)) for n in range(5, 17)]
    lo, hi = Fraction(10, 100), Fraction(1353, 10000)
    if not all(lo < r < hi for r in ratios):
        return CheckResult("limit checks", False, "ratio leaves (0.10, 0.1353)")
    if not all(a < b for a, b in zip(ratios, ratios[1:])):
        return CheckResult("limit checks", False, "ratio not increasing on 5..16")
    if Fraction(ct.pc_count(12), ct.p_count(12)) != Fraction(156217782, 1302061345):
        return CheckResult("limit checks", False, "n=12 ratio mismatch")
    pc_over_fact = [Fraction(ct.pc_count(n), factorial(n)) for n in range(5, 17)]
    inv_e = 1 / e
    if not all(a < b for a, b in zip(pc_over_fact, pc_over_fact[1:])):
        return CheckResult("limit checks", False, "pc(n)/n! not increasing on 5..16")
    if not all(r < inv_e for r in pc_over_fact):
        return CheckResult("limit checks", False, "pc(n)/n! reaches 1/e early")
    return CheckResult("limit checks", True, "all rational inequalities hold")


# ---------------------------------------------------------------------------
# suites


SUITES = {
    "counts": [check_positroid_counts, check_connected_counts, check_lagrange],
    "bijections": [
        check_perm_necklace_roundtrip,
        check_le_bijection,
        check_envelope_properties,
    ],
    "plabic": [check_plabic_pipeline],
    "polytope": [
        check_polytope_descriptions,
        check_dimension_formula,
        check_face_embedding,
    ],
    "nc": [
        check_components_noncrossing,
        check_nc_converse,
        check_kreweras,
        check_kreweras_coarsest,
    ],
    "freeprob": [check_freeprob, check_limits],
}


def run_suite(name: str, bound: int | None = None) -> SuiteReport:
    if name == "all":
        checks = [c for suite in SUITES.values() for c in suite]
    elif name in SUITES:
        checks = SUITES[name]
    else:
        raise UnknownSuite(f"no suite named {name!r}; choose from {sorted(SUITES)} or 'all'")
    results = []
    for check in checks:
        if bound is None:
            results.append(check())
        else:
            try:
                results.append(check(bound))
            except TypeError:
                results.append(check())
    return SuiteReport(name, results)
