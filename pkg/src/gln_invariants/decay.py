"""Matrix-coefficient decay from character data.

The decay rate of a unitarizable representation is encoded by
``t = 1 - 2/p`` where p is the L^p-integrability exponent.  It is computed
from the character multiset by maximizing ``2*sigma_i / (i(N-i))`` over the
prefix sums sigma_i of the non-increasing rearrangement.  For Arthur-type
data there is a closed form depending only on the largest entry of the
attached partition and its multiplicity; both routes are implemented and
cross-checked in the test suite, never trusted alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .partitions import Partition

# Exponents are order-significant tuples of rationals; prefix-sum domination
# compares them.
ExponentList = tuple[Fraction, ...]


class CharacterList:
    """Multiset of rational twist exponents, stored sorted non-increasing.

    The characters produced by the classification of the unitary dual are
    symmetric under negation; arbitrary multisets are accepted so the decay
    formula can be evaluated on any input.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable[Fraction | int]):
        object.__setattr__(
            self, "values", tuple(sorted((Fraction(v) for v in values), reverse=True))
        )

    def __setattr__(self, name, value):
        raise AttributeError("CharacterList is immutable")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, CharacterList):
            return self.values == other.values
        if isinstance(other, (tuple, list)):
            return self.values == tuple(Fraction(v) for v in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"CharacterList({list(self.values)})"

    def is_negation_symmetric(self) -> bool:
        vals = self.values
        return all(vals[i] == -vals[len(vals) - 1 - i] for i in range(len(vals)))


@dataclass(frozen=True)
class DecayResult:
    """t = 1 - 2/p together with the argmax index set of the defining maximum.

    For characters arising from the unitarizable classification, t lies in
    [0, 1] and t = 1 exactly when p is infinite.
    """

    t: Fraction
    p_is_infinite: bool
    maximizers: frozenset[int]

    @property
    def p(self) -> Fraction | None:
        """The integrability exponent 2/(1-t), or None when infinite."""
        if self.p_is_infinite:
            return None
        return 2 / (1 - self.t)


def prefix_sums(values: Sequence[Fraction | int]) -> ExponentList:
    """Running sums sigma_i = a_1 + ... + a_i, one per index."""
    out = []
    total = Fraction(0)
    for v in values:
        total += Fraction(v)
        out.append(total)
    return tuple(out)


def dominates(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> bool:
    """True iff b is dominated by a: every prefix sum of b is <= that of a."""
    if len(a) != len(b):
        raise ValueError(f"exponent lists must have equal length: {len(a)} != {len(b)}")
    sa = sb = Fraction(0)
    for x, y in zip(a, b):
        sa += Fraction(x)
        sb += Fraction(y)
        if sb > sa:
            return False
    return True


def _max_ratio_scan(scaled: Sequence[int], unit: int) -> tuple[int, int, list[int]]:
    """Exact maximum of 2*sigma_i(values)/(i*(n-i)) for values = scaled/unit.

    Scans every cut point 1 <= i <= n-1 with integer cross-multiplication.
    Returns an unreduced (numerator, denominator) pair for the maximum plus
    the full list of maximizing indices.
    """
    n = len(scaled)
    best_n = best_d = 0
    maximizers: list[int] = []
    sigma = 0
    for i in range(1, n):
        sigma += scaled[i - 1]
        num = 2 * sigma
        den = unit * i * (n - i)
        if not maximizers or num * best_d > best_n * den:
            best_n, best_d, maximizers = num, den, [i]
        elif num * best_d == best_n * den:
            maximizers.append(i)
    return best_n, best_d, maximizers


def _scaled_ints(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Clear denominators: returns (integer list, common denominator)."""
    unit = 1
    for v in values:
        unit = unit * v.denominator // math.gcd(unit, v.denominator)
    return [v.numerator * (unit // v.denominator) for v in values], unit


def decay_t(xi: CharacterList | Sequence[Fraction | int]) -> DecayResult:
    """t = max over 1 <= i <= N-1 of 2*sigma_i(xi) / (i(N-i)), exactly.

    ``xi`` is treated as a multiset and rearranged non-increasing before the
    scan.  Requires N >= 2.
    """
    vals = sorted((Fraction(v) for v in xi), reverse=True)
    n = len(vals)
    if n < 2:
        raise ValueError("decay requires a character of length >= 2")
    scaled, unit = _scaled_ints(vals)
    num, den, maxima = _max_ratio_scan(scaled, unit)
    t = Fraction(num, den)
    return DecayResult(t=t, p_is_infinite=(t == 1), maximizers=frozenset(maxima))


def decay_t_arthur(a: Partition | Iterable[int]) -> Fraction:
    """Closed form for Arthur-type data: t = (d1 - 1)/(N - a1) where d1 is the
    largest part and a1 its multiplicity; t = 0 when d1 = 1 and t = 1 when the
    partition is [N]."""
    parts = a.parts if isinstance(a, Partition) else tuple(sorted(a, reverse=True))
    if not parts:
        raise ValueError("empty partition")
    n = sum(parts)
    if n < 2:
        raise ValueError("decay requires N >= 2")
    d1 = parts[0]
    if d1 == 1:
        return Fraction(0)
    a1 = sum(1 for p in parts if p == d1)
    return Fraction(d1 - 1, n - a1)


@dataclass(frozen=True)
class MaximizerReport:
    """Brute-force argmax locations versus the block-boundary candidates."""

    argmax: frozenset[int]
    block_boundaries: frozenset[int]
    contained: bool


def maximizer_certificate(xi: CharacterList | Sequence[Fraction | int]) -> MaximizerReport:
    """Certify that the maximum of sigma_i/(i(N-i)) over i <= N/2 occurs only at
    boundaries of the constant blocks of positive entries.

    The argmax set is computed by brute force; the boundary set is the running
    count s_j of the positive-value blocks of the sorted character.  The
    all-zero character (no positive block) is degenerate and passes by
    convention.
    """
    vals = sorted((Fraction(v) for v in xi), reverse=True)
    n = len(vals)

    scaled, unit = _scaled_ints(vals)
    best_n = best_d = 0
    argmax: list[int] = []
    sigma = 0
    for i in range(1, n // 2 + 1):
        sigma += scaled[i - 1]
        den = unit * i * (n - i)
        if not argmax or sigma * best_d > best_n * den:
            best_n, best_d, argmax = sigma, den, [i]
        elif sigma * best_d == best_n * den:
            argmax.append(i)

    boundaries: list[int] = []
    i = 0
    while i < n and vals[i] > 0:
        j = i
        while j < n and vals[j] == vals[i]:
            j += 1
        boundaries.append(j)
        i = j

    contained = (not boundaries) or set(argmax) <= set(boundaries)
    return MaximizerReport(
        argmax=frozenset(argmax),
        block_boundaries=frozenset(boundaries),
        contained=contained,
    )
