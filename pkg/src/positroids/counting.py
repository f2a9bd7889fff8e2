"""Exact enumeration and the moment/free-cumulant dictionary.

The number of positroids on [n] is p(n) = sum_{k<=n} n!/k!, and the number of
connected ones matches the count of stabilized-interval-free permutations.
Everything here is exact integer or rational arithmetic; the analytic limits
are checked elsewhere as rational inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial

from .bijections import (
    CCW,
    CW,
    decorated_perm,
    necklace_of_perm,
    positroid_of_necklace,
)
from .errors import BoundExceeded, InsufficientPrefix
from .matroid import is_connected
from .noncrossing import _nc_blocks, is_sif


@dataclass(frozen=True)
class CountSequence:
    """An exact integer sequence indexed from n = 1."""

    values: tuple[int, ...]
    role: str = ""

    def value(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise InsufficientPrefix(f"sequence {self.role!r} has no entry for n={n}")
        return self.values[n - 1]

    def __len__(self):
        return len(self.values)


def p_count(n: int) -> int:
    """Number of positroids on [n]."""
    return sum(factorial(n) // factorial(k) for k in range(n + 1))


def _sif_seeded(n: int) -> int:
    # a(1) = 1 normalizes the recurrence to the SIF count; see pc_count
    a = [0, 1]
    for m in range(2, n + 1):
        total = (m - 1) * a[m - 1]
        total += sum((j - 1) * a[j] * a[m - j] for j in range(2, m - 1))
        a.append(total)
    return a[n]


def pc_count(n: int) -> int:
    """Number of connected positroids on [n].

    Both the loop and the coloop count for n = 1, so the value 2 there stands
    outside the recurrence, which is seeded with 1 instead.
    """
    if n == 1:
        return 2
    return _sif_seeded(n)


def p_sequence(n: int) -> CountSequence:
    return CountSequence(tuple(p_count(k) for k in range(1, n + 1)), "positroid-counts")


def pc_sequence(n: int) -> CountSequence:
    return CountSequence(tuple(pc_count(k) for k in range(1, n + 1)), "connected-counts")


# ---------------------------------------------------------------------------
# brute-force enumeration


def decorated_permutations(n: int):
    """All decorated permutations of [n]: each permutation with every
    coloring of its fixed points."""
    for perm in permutations(range(1, n + 1)):
        fixed = [j for j in range(1, n + 1) if perm[j - 1] == j]
        for coloring in product((CW, CCW), repeat=len(fixed)):
            yield decorated_perm(perm, dict(zip(fixed, coloring)))


def enumerate_positroids(n: int):
    """Each positroid on [n] exactly once, via decorated permutations."""
    if n > 7:
        raise BoundExceeded(f"positroid enumeration guarded at n=7, got n={n}")
    seen: set[frozenset[frozenset[int]]] = set()
    for p in decorated_permutations(n):
        m = positroid_of_necklace(necklace_of_perm(p))
        if m.bases not in seen:
            seen.add(m.bases)
            yield m


def count_connected_bruteforce(n: int) -> int:
    """Count stabilized-interval-free permutations of [n] directly."""
    if not 2 <= n <= 7:
        raise BoundExceeded(f"brute force guarded to 2..7, got n={n}")
    count = 0
    for perm in permutations(range(1, n + 1)):
        p = decorated_perm(perm, {j: CW for j in range(1, n + 1) if perm[j - 1] == j})
        if is_sif(p):
            count += 1
    return count


def count_connected_by_components(n: int) -> int:
    """Count enumerated positroids with one connected component."""
    return sum(1 for m in enumerate_positroids(n) if is_connected(m))


# ---------------------------------------------------------------------------
# the non-crossing composition transform


def nc_transform(f: CountSequence, n: int) -> int:
    """h(n) = sum over non-crossing partitions of products of f(block size)."""
    if n > len(f.values):
        raise InsufficientPrefix(f"need f up to {n}, have {len(f.values)}")
    total = 0
    for blocks in _nc_blocks(tuple(range(1, n + 1))):
        prod = 1
        for b in blocks:
            prod *= f.value(len(b))
        total += prod
    return total


def free_cumulants_from_moments(m: CountSequence, n: int) -> CountSequence:
    """Invert the moment formula: k_n = m_n minus the contribution of all
    non-trivial non-crossing partitions (triangular, so exact)."""
    if n > len(m.values):
        raise InsufficientPrefix(f"need moments up to {n}, have {len(m.values)}")
    k: list[int] = []
    for size in range(1, n + 1):
        acc = 0
        for blocks in _nc_blocks(tuple(range(1, size + 1))):
            if len(blocks) == 1:
                continue
            prod = 1
            for b in blocks:
                prod *= k[len(b) - 1]
            acc += prod
        k.append(m.value(size) - acc)
    return CountSequence(tuple(k), "free-cumulants")


def shifted_exp_moment(n: int) -> int:
    """n-th moment of 1 + Exp(1): sum_j C(n,j) j!."""
    return sum(comb(n, j) * factorial(j) for j in range(n + 1))


# ---------------------------------------------------------------------------
# Lagrange inversion


def _series_mul(a, b, prec):
    out = [Fraction(0)] * prec
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if i + j >= prec:
                break
            out[i + j] += ai * bj
    return out


def _series_recip(a, prec):
    # a[0] must be nonzero
    out = [Fraction(0)] * prec
    out[0] = 1 / Fraction(a[0])
    for i in range(1, prec):
        s = sum(a[j] * out[i - j] for j in range(1, min(i, len(a) - 1) + 1))
        out[i] = -s / a[0]
    return out


def lagrange_check(n: int) -> bool:
    """Verify the inversion formula tying the connected count to a negative
    power of the full generating function."""
    prec = n + 1
    # P(x) = 1 + sum p(k) x^k, an invertible series
    p = [Fraction(1)] + [Fraction(p_count(k)) for k in range(1, prec)]
    r = _series_recip(p, prec)
    power = [Fraction(0)] * prec
    power[0] = Fraction(1)
    for _ in range(n - 1):
        power = _series_mul(power, r, prec)
    coeff = power[n]  # = [x^n] P(x)^{1-n}
    return coeff / (1 - n) == pc_count(n)
