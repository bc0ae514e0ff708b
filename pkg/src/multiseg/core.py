"""Exact-arithmetic model of cuspidal lines, points, segments and multisegments.

A *cuspidal line* is the lattice of unramified twists ``nu^c * rho`` of an
abstract cuspidal representation ``rho``; we only track its identifier, its
size (the ``n`` with ``rho`` living on ``GL_n``) and the identifier of its
dual line.  A *segment* is an interval of consecutive integer twists on a
line, stored with exact rational endpoints, and a *multisegment* is a
multiset of segments kept in a fixed canonical order.

Exponents are `fractions.Fraction` with denominator 1 or 2: everything in
the truncation calculus happens inside a single Z-coset, and the only
half-integral shifts that occur come from the global ``nu^{+-1/2}`` twists.
Points in distinct Z-cosets of the same line are never linked.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Union

Rational = Union[int, str, Fraction]


def to_exact(value: Rational) -> Fraction:
    """Coerce to an exact rational with denominator 1 or 2."""
    f = Fraction(value)
    if f.denominator not in (1, 2):
        raise ValueError(
            f"exponent {f} has denominator {f.denominator}; only 1 or 2 are allowed"
        )
    return f


@dataclass(frozen=True)
class CuspidalLine:
    """An abstract cuspidal representation class.

    ``size`` is the ``n`` such that the cuspidal lives on ``GL_n``;
    ``dual_id`` names the line of the contragredient (equal to ``id``
    for self-dual lines).
    """

    id: str
    size: int
    dual_id: Optional[str] = None

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"line size must be >= 1, got {self.size}")
        if self.dual_id is None:
            object.__setattr__(self, "dual_id", self.id)

    @property
    def self_dual(self) -> bool:
        return self.dual_id == self.id


#: The line of unramified characters of GL(1); self-dual, predeclared.
CHR = CuspidalLine("chr", 1, "chr")

LineTable = Mapping[str, CuspidalLine]


def dual_line(line: CuspidalLine, lines: Optional[LineTable] = None) -> CuspidalLine:
    """Resolve the dual of a line, checking the involution constraints."""
    if line.self_dual:
        return line
    if lines is None or line.dual_id not in lines:
        raise KeyError(f"dual line {line.dual_id!r} of {line.id!r} is not registered")
    d = lines[line.dual_id]
    if d.size != line.size:
        raise ValueError(f"dual lines {line.id!r}/{d.id!r} have different sizes")
    if d.dual_id != line.id:
        raise ValueError(f"duality between {line.id!r} and {d.id!r} is not an involution")
    return d


@dataclass(frozen=True)
class CuspidalPoint:
    """A single twist ``nu^exp * rho`` on a cuspidal line."""

    line: CuspidalLine
    exp: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "exp", to_exact(self.exp))

    def shift(self, c: Rational) -> "CuspidalPoint":
        return CuspidalPoint(self.line, self.exp + to_exact(c))

    def comparable(self, other: "CuspidalPoint") -> bool:
        """Whether the two points lie in the same Z-coset of the same line."""
        return self.line == other.line and (self.exp - other.exp).denominator == 1

    def __str__(self) -> str:
        return f"nu^{self.exp}@{self.line.id}"


def point_precedes(p: CuspidalPoint, q: CuspidalPoint) -> bool:
    """True iff ``q = nu^c p`` for a positive integer ``c``."""
    return p.comparable(q) and q.exp > p.exp


@dataclass(frozen=True)
class Segment:
    """A Zelevinsky segment ``[nu^a rho, nu^b rho]`` with ``b - a`` in Z>=0."""

    line: CuspidalLine
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        a = to_exact(self.a)
        b = to_exact(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        d = b - a
        if d.denominator != 1 or d < 0:
            raise ValueError(f"segment endpoints need b - a in Z>=0, got [{a},{b}]")

    @property
    def rel_length(self) -> int:
        return int(self.b - self.a) + 1

    @property
    def abs_length(self) -> int:
        return self.line.size * self.rel_length

    @property
    def a_point(self) -> CuspidalPoint:
        return CuspidalPoint(self.line, self.a)

    @property
    def b_point(self) -> CuspidalPoint:
        return CuspidalPoint(self.line, self.b)

    @property
    def sort_key(self):
        # canonical: line id ascending, then b descending, then a descending
        return (self.line.id, -self.b, -self.a)

    def shift(self, c: Rational) -> "Segment":
        c = to_exact(c)
        return Segment(self.line, self.a + c, self.b + c)

    def contains(self, other: "Segment") -> bool:
        return (
            self.line == other.line
            and (self.a - other.a).denominator == 1
            and self.a <= other.a
            and other.b <= self.b
        )

    def points(self) -> Iterator[CuspidalPoint]:
        e = self.a
        while e <= self.b:
            yield CuspidalPoint(self.line, e)
            e += 1

    def __str__(self) -> str:
        if self.a == self.b:
            return f"[{self.a}]@{self.line.id}"
        return f"[{self.a},{self.b}]@{self.line.id}"


def seg(a: Rational, b: Optional[Rational] = None, line: CuspidalLine = CHR) -> Segment:
    """Convenience constructor; ``seg(a)`` is the singleton ``[a, a]``."""
    return Segment(line, to_exact(a), to_exact(a if b is None else b))


def linked(d1: Segment, d2: Segment) -> bool:
    """Neither contains the other and the union is again a segment."""
    if d1.line != d2.line or (d1.a - d2.a).denominator != 1:
        return False
    if d1.contains(d2) or d2.contains(d1):
        return False
    return max(d1.a, d2.a) <= min(d1.b, d2.b) + 1


def precedes(d1: Segment, d2: Segment) -> bool:
    """Linked with the b-end strictly increasing from d1 to d2."""
    return linked(d1, d2) and d2.b > d1.b


@dataclass(frozen=True)
class Multisegment:
    """A multiset of segments, canonically ordered.

    The canonical order sorts by line id, then b descending, then a
    descending; in particular an earlier segment never precedes a later
    one.  Instances are immutable and hashable.
    """

    segments: tuple = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.segments, key=lambda s: s.sort_key))
        object.__setattr__(self, "segments", ordered)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __bool__(self) -> bool:
        return bool(self.segments)

    def __add__(self, other: "Multisegment") -> "Multisegment":
        return Multisegment(self.segments + other.segments)

    @property
    def degree(self) -> int:
        """Total absolute length n(m)."""
        return sum(s.abs_length for s in self.segments)

    @property
    def sort_key(self):
        return [s.sort_key for s in self.segments]

    def count_by_length(self, l: int) -> int:
        """N(m, l): number of segments of relative length exactly l."""
        return sum(1 for s in self.segments if s.rel_length == l)

    def csupp(self) -> Counter:
        """Cuspidal support as a multiset of points."""
        c: Counter = Counter()
        for s in self.segments:
            c.update(s.points())
        return c

    def csupp_set(self) -> frozenset:
        return frozenset(self.csupp())

    def csupp_Z(self) -> frozenset:
        """Set of (line, exponent mod Z) classes met by the support."""
        return frozenset((s.line, s.a % 1) for s in self.segments)

    def shift(self, c: Rational) -> "Multisegment":
        return Multisegment(tuple(s.shift(c) for s in self.segments))

    def add(self, *extra: Segment) -> "Multisegment":
        return Multisegment(self.segments + tuple(extra))

    def remove(self, target: Segment) -> "Multisegment":
        out = list(self.segments)
        out.remove(target)
        return Multisegment(tuple(out))

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.segments) + "}"


def mseg(*segments: Segment) -> Multisegment:
    return Multisegment(tuple(segments))


def shift(x: Union[Segment, Multisegment, CuspidalPoint], c: Rational):
    """Translate every exponent by c; works on points, segments, multisegments."""
    return x.shift(c)


def dual(
    x: Union[Segment, Multisegment], lines: Optional[LineTable] = None
) -> Union[Segment, Multisegment]:
    """Contragredient: [a,b] on L goes to [-b,-a] on the dual of L."""
    if isinstance(x, Multisegment):
        return Multisegment(tuple(dual(s, lines) for s in x))
    return Segment(dual_line(x.line, lines), -x.b, -x.a)


class LabelKind(Enum):
    """The two parameterizations of irreducibles by multisegments."""

    ZELEVINSKY = "zelevinsky"  # unique submodule of the zeta-product
    LANGLANDS = "langlands"  # unique quotient of the St-product


@dataclass(frozen=True)
class IrreducibleLabel:
    """A formal label <m> or St(m); no conversion between kinds is attempted."""

    kind: LabelKind
    mult: Multisegment
