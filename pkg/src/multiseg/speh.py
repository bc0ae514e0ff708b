"""Speh multisegments: recognition, exact derivatives, and decompositions.

A Speh multisegment is a family of consecutive nu-shifts of a single
segment.  Its derivatives are known exactly: a right derivative truncates
the lowest members once at the b-end, a left derivative truncates the
highest members once at the a-end.  Every multisegment decomposes
greedily into Speh blocks, and that decomposition constrains which
truncation patterns can realize actual submodules of a derivative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .core import Multisegment, Segment, point_precedes
from .derivatives import Side, apply_vector, truncate, truncation_vectors


class CertificationError(RuntimeError):
    """A structural property that is guaranteed by theory failed to verify."""


@dataclass(frozen=True)
class SpehBlock:
    """A consecutive shift family {top, nu^-1 top, ..., nu^-(count-1) top}."""

    top: Segment
    count: int

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("a Speh block has at least one member")

    @property
    def members(self) -> Tuple[Segment, ...]:
        return tuple(self.top.shift(-j) for j in range(self.count))

    @property
    def multisegment(self) -> Multisegment:
        return Multisegment(self.members)

    @property
    def rel_length(self) -> int:
        """Common relative length of the members (the block's L)."""
        return self.top.rel_length

    @property
    def centered(self) -> Segment:
        """The defining segment in the symmetric presentation m(count, Delta)."""
        return self.top.shift(-Fraction(self.count - 1, 2))


def is_speh(m: Multisegment) -> Optional[SpehBlock]:
    """The block if m is exactly a consecutive shift family, else None."""
    segs = list(m)
    if not segs:
        return None
    top = segs[0]
    if segs == [top.shift(-j) for j in range(len(segs))]:
        return SpehBlock(top, len(segs))
    return None


def speh_right_derivative(b: SpehBlock, i: int) -> Multisegment:
    """The i lowest members truncated once at the b-end; empties dropped."""
    if not 0 <= i <= b.count:
        raise ValueError(f"derivative index {i} outside 0..{b.count}")
    out = []
    for j, s in enumerate(b.members):
        t = truncate(s, Side.RIGHT, 1) if j >= b.count - i else s
        if t is not None:
            out.append(t)
    return Multisegment(tuple(out))


def speh_left_derivative(b: SpehBlock, i: int) -> Multisegment:
    """The i highest members truncated once at the a-end; empties dropped."""
    if not 0 <= i <= b.count:
        raise ValueError(f"derivative index {i} outside 0..{b.count}")
    out = []
    for j, s in enumerate(b.members):
        t = truncate(s, Side.LEFT, 1) if j < i else s
        if t is not None:
            out.append(t)
    return Multisegment(tuple(out))


def speh_derivative_at_order(
    b: SpehBlock, order: int, side: Side
) -> Optional[Multisegment]:
    """Order-indexed derivative; None unless the order is i * line-size, 0<=i<=count."""
    l = b.top.line.size
    if order % l != 0:
        return None
    i = order // l
    if i > b.count:
        return None
    if side is Side.RIGHT:
        return speh_right_derivative(b, i)
    return speh_left_derivative(b, i)


@dataclass(frozen=True)
class SpehDecomposition:
    """An ordered partition of a multisegment into Speh blocks.

    ``slots`` aligns each block's members (top first) with canonical slot
    indices of the source multisegment.  ``certified`` records the
    verified structural properties: partition, no-extension, b-ordering
    and nested-or-disjoint overlap.
    """

    source: Multisegment
    blocks: Tuple[SpehBlock, ...]
    slots: Tuple[Tuple[int, ...], ...]

    def certify(self) -> Dict[str, bool]:
        blocks = self.blocks
        flags = {
            "partition": sum((b.multisegment for b in blocks), Multisegment())
            == self.source,
            "no_extension": all(
                is_speh(blocks[i].multisegment.add(d)) is None
                for i in range(len(blocks))
                for j in range(i + 1, len(blocks))
                for d in blocks[j].members
            ),
            "b_order": all(
                not point_precedes(blocks[i].top.b_point, blocks[j].top.b_point)
                for i in range(len(blocks))
                for j in range(i + 1, len(blocks))
            ),
            "nesting": all(
                _nested_or_disjoint(blocks[i], blocks[j])
                for i in range(len(blocks))
                for j in range(i + 1, len(blocks))
            ),
        }
        return flags


def _nested_or_disjoint(bi: SpehBlock, bj: SpehBlock) -> bool:
    ci = dict.fromkeys(bi.members)
    if any(s in ci for s in bj.members):
        return all(s in ci for s in bj.members)
    return True


def speh_decompose(m: Multisegment, certify: bool = True) -> SpehDecomposition:
    """Greedy extraction of Speh blocks in canonical order.

    Take the first remaining canonical segment, extend it downward by
    nu^-1 shifts as far as possible, emit the block, repeat.  The
    structural properties are certified; a failure raises
    CertificationError since it would contradict the theory.
    """
    remaining: List[Optional[Segment]] = list(m)
    blocks: List[SpehBlock] = []
    slot_lists: List[Tuple[int, ...]] = []
    for start, s in enumerate(remaining):
        if s is None:
            continue
        top = s
        used = [start]
        remaining[start] = None
        j = 1
        while True:
            want = top.shift(-j)
            idx = next(
                (k for k, t in enumerate(remaining) if t == want), None
            )
            if idx is None:
                break
            used.append(idx)
            remaining[idx] = None
            j += 1
        blocks.append(SpehBlock(top, j))
        slot_lists.append(tuple(used))
    decomp = SpehDecomposition(m, tuple(blocks), tuple(slot_lists))
    if certify:
        flags = decomp.certify()
        bad = [name for name, ok in flags.items() if not ok]
        if bad:
            raise CertificationError(
                f"Speh decomposition of {m} failed properties: {', '.join(bad)}"
            )
    return decomp


def respects_block_prefixes(
    vec: Tuple[int, ...], decomp: SpehDecomposition, side: Side
) -> bool:
    """Whether a truncation vector matches the exact Speh derivative shape.

    Inside each block (members listed top first) a right derivative may
    only truncate a bottom run of members, a left derivative only a top
    run.
    """
    for slots in decomp.slots:
        marks = [vec[i] for i in slots]
        k = sum(marks)
        if side is Side.RIGHT:
            want = [0] * (len(slots) - k) + [1] * k
        else:
            want = [1] * k + [0] * (len(slots) - k)
        if marks != want:
            return False
    return True


def prefix_candidates(m: Multisegment, order: int, side: Side) -> frozenset:
    """One-step truncation candidates restricted to block-compatible vectors."""
    decomp = speh_decompose(m)
    return frozenset(
        apply_vector(m, vec, side)
        for vec in truncation_vectors(m, order)
        if respects_block_prefixes(vec, decomp, side)
    )


def speh_times_segment_irreducible(b: SpehBlock, d: Segment) -> bool:
    """Whether the product of the block's Speh label with a segment label commutes.

    In centered coordinates [a', b'] for the block, the product is
    irreducible (and the factors commute) iff
    ``a' - (count-1)/2 <= a(d) <= b(d) <= b' + (count-1)/2``.  Segments on
    a different line or in a different Z-coset are unlinked everywhere and
    give True.
    """
    c = b.centered
    if d.line != c.line or (d.a - c.a).denominator != 1:
        return True
    half = Fraction(b.count - 1, 2)
    return c.a - half <= d.a and d.b <= c.b + half


def speh_sandwich_embedding_ok(
    n1: Multisegment, b: SpehBlock, n2: Multisegment
) -> bool:
    """Hypotheses under which zeta(n1) x <block> x zeta(n2) has a unique submodule.

    With Delta the block's centered defining segment: every segment of n1
    must have its b-end above or equal to b(Delta); every segment of n2
    must have its b-end not above b(Delta), except when it right-truncates
    exactly onto Delta.
    """
    bp = b.centered.b_point
    for d in n1:
        if not (point_precedes(bp, d.b_point) or bp == d.b_point):
            return False
    for d in n2:
        if point_precedes(bp, d.b_point) and truncate(d, Side.RIGHT, 1) != b.centered:
            return False
    return True
