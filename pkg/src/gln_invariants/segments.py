"""Segments and multisegments over symbolic supercuspidal labels.

A segment <a,b>_rho is the set of twists |.|^a rho, ..., |.|^b rho with
b - a a non-negative integer.  Multisegments (multisets of segments) carry
both classifications of irreducible representations; only the label's
identity and ambient dimension enter any formula implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .decay import CharacterList
from .partitions import Partition, dual_partition, orbit_dim
from .rationals import parse_rat, rat_str


@dataclass(frozen=True)
class SupercuspidalLabel:
    """Opaque token for a supercuspidal building block on GL_dim."""

    id: str
    dim: int

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"label dimension must be a positive integer, got {self.dim!r}")

    def to_json(self) -> dict:
        return {"id": self.id, "dim": self.dim}

    @classmethod
    def from_json(cls, data: dict) -> "SupercuspidalLabel":
        return cls(id=str(data["id"]), dim=data["dim"])


class Segment:
    """Normalized segment <a,b>_rho with unitary rho; b - a is an integer >= 0.

    An optional ``twist`` is folded into the endpoints on construction, so the
    stored label is always read as unitary.
    """

    __slots__ = ("rho", "a", "b")

    def __init__(self, rho: SupercuspidalLabel, a, b, twist=0):
        t = Fraction(twist)
        a = Fraction(a) + t
        b = Fraction(b) + t
        span = b - a
        if span.denominator != 1 or span < 0:
            raise ValueError(f"b - a must be a non-negative integer, got {span}")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("Segment is immutable")

    @property
    def length(self) -> int:
        return int(self.b - self.a) + 1

    @property
    def ambient_dim(self) -> int:
        return self.rho.dim * self.length

    @property
    def midpoint(self) -> Fraction:
        return (self.a + self.b) / 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Segment):
            return NotImplemented
        return self.rho == other.rho and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.rho, self.a, self.b))

    def __repr__(self) -> str:
        return f"Segment({self.rho.id}[{self.rho.dim}], {self.a}, {self.b})"

    def to_json(self) -> dict:
        return {"rho": self.rho.to_json(), "a": rat_str(self.a), "b": rat_str(self.b)}

    @classmethod
    def from_json(cls, data: dict) -> "Segment":
        rho = SupercuspidalLabel.from_json(data["rho"])
        return cls(rho, parse_rat(str(data["a"])), parse_rat(str(data["b"])))


def is_linked(s1: Segment, s2: Segment) -> bool:
    """True iff the two segments lie on the same cuspidal line at integer
    offset, their union is a segment, and neither contains the other."""
    if s1.rho.id != s2.rho.id:
        return False
    if (s2.a - s1.a).denominator != 1:
        return False
    if max(s1.a, s2.a) > min(s1.b, s2.b) + 1:
        return False  # union is not a segment
    if s1.a <= s2.a and s2.b <= s1.b:
        return False  # s1 contains s2
    if s2.a <= s1.a and s1.b <= s2.b:
        return False  # s2 contains s1
    return True


def precedes(s1: Segment, s2: Segment) -> bool:
    """True iff s1 and s2 are linked with s1 starting strictly earlier:
    a1 < a2 (integer offset), b1 < b2, and a2 <= b1 + 1."""
    if s1.rho.id != s2.rho.id:
        return False
    diff = s2.a - s1.a
    if diff.denominator != 1 or diff <= 0:
        return False
    return s1.b < s2.b and s2.a <= s1.b + 1


def _segment_sort_key(s: Segment):
    # a-descending within a cuspidal line: since `precedes` needs a1 < a2, no
    # earlier segment can precede a later one.
    return (s.rho.id, -s.a, -s.b)


class Multisegment:
    """Multiset of segments, stored in a canonical order where no earlier
    segment precedes a later one."""

    __slots__ = ("segments",)

    def __init__(self, segments: Iterable[Segment]):
        segs = tuple(sorted(segments, key=_segment_sort_key))
        if not segs:
            raise ValueError("multisegment must contain at least one segment")
        dims = {}
        for s in segs:
            if dims.setdefault(s.rho.id, s.rho.dim) != s.rho.dim:
                raise ValueError(f"label {s.rho.id!r} used with inconsistent dimensions")
        object.__setattr__(self, "segments", segs)

    def __setattr__(self, name, value):
        raise AttributeError("Multisegment is immutable")

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self) -> int:
        return hash(self.segments)

    def __repr__(self) -> str:
        return f"Multisegment({list(self.segments)})"

    @property
    def total_dim(self) -> int:
        return sum(s.ambient_dim for s in self.segments)

    def ordered(self) -> tuple[Segment, ...]:
        """The segments in an order where no earlier element precedes a later
        one (this is the storage order)."""
        return self.segments

    def partition(self) -> Partition:
        """Segment lengths, each with the multiplicity of its label dimension."""
        parts = []
        for s in self.segments:
            parts.extend([s.length] * s.rho.dim)
        return Partition(parts)

    def wavefront(self) -> Partition:
        """Wavefront partition: the dual of :meth:`partition` (this multisegment
        read as Zelevinsky data)."""
        return dual_partition(self.partition())

    def gk_dim(self) -> Fraction:
        """GK-dimension (Zelevinsky reading): half of N^2 minus the sum of
        N_i * length_i^2; equals half the wavefront orbit dimension."""
        n = self.total_dim
        return Fraction(n * n - sum(s.rho.dim * s.length**2 for s in self.segments), 2)

    def character(self) -> CharacterList:
        """Character multiset (Langlands reading): each segment's midpoint with
        multiplicity N_i * length_i.  Cardinality equals total_dim."""
        vals = []
        for s in self.segments:
            vals.extend([s.midpoint] * s.ambient_dim)
        return CharacterList(vals)

    def is_tempered(self) -> bool:
        """Langlands reading: tempered mod center iff all midpoints coincide."""
        mids = {s.midpoint for s in self.segments}
        return len(mids) == 1

    def to_json(self) -> dict:
        return {"segments": [s.to_json() for s in self.segments]}

    @classmethod
    def from_json(cls, data: dict) -> "Multisegment":
        return cls(Segment.from_json(d) for d in data["segments"])


def gk_dim_from_wavefront(m: Multisegment) -> Fraction:
    """GK-dimension recomputed as half the dimension of the wavefront orbit.
    Second route used by consistency checks."""
    return Fraction(orbit_dim(m.wavefront()), 2)
