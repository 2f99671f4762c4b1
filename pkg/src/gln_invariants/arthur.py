"""Unitarizable and Arthur-type representation data.

A unitarizable irreducible of GL_N is a sum of twisted summands
|.|^x rho[a][d]; twists are zero (Arthur type) or occur in +/- pairs with
0 < |x| < 1/2.  This module expands such data to its Langlands and Zelevinsky
multisegments, computes the a <-> d duality swap, the (augmented) Arthur-SL2
partition, the character, the GK-dimension, and the normalized
non-genericity parameter g.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .decay import CharacterList, ExponentList
from .partitions import Partition
from .rationals import parse_rat, rat_str
from .segments import Multisegment, Segment, SupercuspidalLabel


@dataclass(frozen=True)
class ArthurSummand:
    """One summand |.|^x rho[a][d]: a is the tempered-SL2 (Steinberg) length,
    d the Arthur-SL2 (Speh) length, x a twist with |x| < 1/2."""

    rho: SupercuspidalLabel
    a: int
    d: int
    x: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.a, int) or self.a < 1:
            raise ValueError(f"a must be a positive integer, got {self.a!r}")
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"d must be a positive integer, got {self.d!r}")
        object.__setattr__(self, "x", Fraction(self.x))
        if abs(self.x) >= Fraction(1, 2):
            raise ValueError(
                f"twist x must lie strictly inside (-1/2, 1/2), got {self.x}"
            )

    @property
    def dim(self) -> int:
        return self.rho.dim * self.a * self.d

    def to_json(self) -> dict:
        return {
            "rho": self.rho.to_json(),
            "a": self.a,
            "d": self.d,
            "x": rat_str(self.x),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ArthurSummand":
        return cls(
            rho=SupercuspidalLabel.from_json(data["rho"]),
            a=data["a"],
            d=data["d"],
            x=parse_rat(str(data.get("x", "0"))),
        )


def _summand_sort_key(s: ArthurSummand):
    return (-s.d, -s.a, s.rho.id, -s.x)


class UnitaryRep:
    """Sum of summands in the shape of the unitarizable classification.

    The default constructor enforces that twisted summands occur in +/- pairs
    with identical (rho, a, d); :meth:`unchecked` skips that pairing check and
    admits arbitrary augmented data, on which every formula here is still
    well-defined.
    """

    __slots__ = ("summands",)

    def __init__(self, summands: Iterable[ArthurSummand], *, _check_pairing: bool = True):
        ss = tuple(sorted(summands, key=_summand_sort_key))
        if not ss:
            raise ValueError("representation needs at least one summand")
        dims = {}
        for s in ss:
            if dims.setdefault(s.rho.id, s.rho.dim) != s.rho.dim:
                raise ValueError(f"label {s.rho.id!r} used with inconsistent dimensions")
        if _check_pairing:
            twisted = Counter((s.rho, s.a, s.d, s.x) for s in ss if s.x != 0)
            for (rho, a, d, x), mult in twisted.items():
                if twisted.get((rho, a, d, -x), 0) != mult:
                    raise ValueError(
                        f"twisted summand {rho.id}[{a}][{d}] with x={x} must be "
                        f"paired with the opposite twist -x"
                    )
        object.__setattr__(self, "summands", ss)

    @classmethod
    def unchecked(cls, summands: Iterable[ArthurSummand]) -> "UnitaryRep":
        """Admit arbitrary augmented data without the +/- pairing constraint."""
        return cls(summands, _check_pairing=False)

    def __setattr__(self, name, value):
        raise AttributeError("UnitaryRep is immutable")

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self) -> Iterator[ArthurSummand]:
        return iter(self.summands)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitaryRep):
            return NotImplemented
        return self.summands == other.summands

    def __hash__(self) -> int:
        return hash(self.summands)

    def __repr__(self) -> str:
        body = " + ".join(
            f"|.|^{s.x} {s.rho.id}[{s.a}][{s.d}]" if s.x else f"{s.rho.id}[{s.a}][{s.d}]"
            for s in self.summands
        )
        return f"UnitaryRep({body})"

    @property
    def N(self) -> int:
        return sum(s.dim for s in self.summands)

    @property
    def is_arthur_type(self) -> bool:
        return all(s.x == 0 for s in self.summands)

    def langlands_data(self) -> Multisegment:
        """Expand to the Langlands multisegment: for each summand and each
        j = 1..d, the segment centered at x + (d-2j+1)/2 of length a."""
        segs = []
        for s in self.summands:
            lo = Fraction(1 - s.a, 2)
            hi = Fraction(s.a - 1, 2)
            for j in range(1, s.d + 1):
                center = s.x + Fraction(s.d - 2 * j + 1, 2)
                segs.append(Segment(s.rho, center + lo, center + hi))
        return Multisegment(segs)

    def az_dual(self) -> "UnitaryRep":
        """Aubert-Zelevinsky dual: swap a <-> d in every summand."""
        return UnitaryRep(
            (ArthurSummand(s.rho, s.d, s.a, s.x) for s in self.summands),
            _check_pairing=False,
        )

    def zelevinsky_data(self) -> Multisegment:
        """Zelevinsky multisegment: the Langlands data of the dual."""
        return self.az_dual().langlands_data()

    def arthur_sl2(self) -> Partition:
        """Partition with d repeated rho.dim * a times per summand."""
        parts = []
        for s in self.summands:
            parts.extend([s.d] * (s.rho.dim * s.a))
        return Partition(parts)

    def arthur_sl2_augmented(self) -> tuple[tuple[Fraction, int], ...]:
        """Multiset of (x, d) pairs with the same multiplicities as
        :meth:`arthur_sl2`."""
        pairs = []
        for s in self.summands:
            pairs.extend([(s.x, s.d)] * (s.rho.dim * s.a))
        return tuple(sorted(pairs, key=lambda p: (-p[1], -p[0])))

    def gk_dim(self) -> Fraction:
        """Half of N^2 minus the sum of d^2 over the Arthur-SL2 entries."""
        n = self.N
        sq = sum(s.rho.dim * s.a * s.d * s.d for s in self.summands)
        return Fraction(n * n - sq, 2)

    def character(self) -> CharacterList:
        """Character multiset: for each augmented entry (x, d) the string
        x + (d-1)/2, x + (d-3)/2, ..., x + (1-d)/2."""
        vals = []
        for s in self.summands:
            mult = s.rho.dim * s.a
            for k in range(s.d - 1, -s.d, -2):
                vals.extend([s.x + Fraction(k, 2)] * mult)
        return CharacterList(vals)

    def non_genericity(self) -> Fraction:
        """g = 1 - gk_dim / (N(N-1)/2), in [0, 1]; 0 for generic data and 1
        for a character.  Undefined for N = 1."""
        n = self.N
        if n < 2:
            raise ValueError("non-genericity needs N >= 2")
        total = sum(s.rho.dim * s.a * s.d * (s.d - 1) for s in self.summands)
        return Fraction(total, n * (n - 1))

    def to_json(self) -> dict:
        return {"summands": [s.to_json() for s in self.summands]}

    @classmethod
    def from_json(cls, data: dict) -> "UnitaryRep":
        return cls(ArthurSummand.from_json(d) for d in data["summands"])


def simple_exponent(rho_dim: int, a: int, d: int) -> ExponentList:
    """Ordered exponent of rho[a][d]: the value (-d-1+2i)/2 repeated
    rho_dim * a times for i = 1..d, in ascending blocks."""
    if rho_dim < 1 or a < 1 or d < 1:
        raise ValueError("rho_dim, a, d must be positive integers")
    mult = rho_dim * a
    out = []
    for i in range(1, d + 1):
        out.extend([Fraction(-d - 1 + 2 * i, 2)] * mult)
    return tuple(out)
