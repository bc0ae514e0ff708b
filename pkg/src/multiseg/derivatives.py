"""Truncation calculus and derivative candidate enumeration.

Right truncation drops points from the b-end of a segment, left truncation
from the a-end.  The derivative of a Zelevinsky-labelled representation at
order ``i`` is approximated combinatorially by the set of multisegments
obtained by truncating each segment at most once, with the truncated slots
contributing their line size to the order.  For Steinberg-labelled generic
representations deeper truncations are allowed per segment.
"""

from __future__ import annotations

from enum import Enum
from itertools import product
from typing import Iterator, Optional, Tuple

from .core import Multisegment, Segment, mseg


class Side(Enum):
    RIGHT = "right"  # Delta^-, drops the b-end
    LEFT = "left"  # ^-Delta, drops the a-end


def truncate(d: Segment, side: Side, k: int = 1) -> Optional[Segment]:
    """Remove k points from one end; None once the segment is exhausted."""
    if k < 0:
        raise ValueError("truncation count must be non-negative")
    if k >= d.rel_length:
        return None
    if side is Side.RIGHT:
        return Segment(d.line, d.a, d.b - k)
    return Segment(d.line, d.a + k, d.b)


def truncate_order(d: Segment, side: Side, order: int) -> Optional[Segment]:
    """Order-indexed truncation Delta^(i); empty unless the line size divides i."""
    if order % d.line.size != 0:
        return None
    return truncate(d, side, order // d.line.size)


def truncation_vectors(m: Multisegment, order: int) -> Iterator[Tuple[int, ...]]:
    """All 0/1 vectors over the canonical slots whose truncated line sizes sum to order."""
    sizes = [s.line.size for s in m]
    for vec in product((0, 1), repeat=len(sizes)):
        if sum(e * l for e, l in zip(vec, sizes)) == order:
            yield vec


def apply_vector(m: Multisegment, vec: Tuple[int, ...], side: Side) -> Multisegment:
    """Truncate once at each marked slot, dropping segments that vanish."""
    out = []
    for e, s in zip(vec, m):
        t = truncate(s, side, 1) if e else s
        if t is not None:
            out.append(t)
    return Multisegment(tuple(out))


def derivative_candidates(m: Multisegment, order: int, side: Side) -> frozenset:
    """Deduplicated multisegments reachable by one-step truncations of total order."""
    return frozenset(apply_vector(m, vec, side) for vec in truncation_vectors(m, order))


def level(m: Multisegment) -> int:
    """Order of the highest derivative: every segment truncated once."""
    return sum(s.line.size for s in m)


def highest_derivative(m: Multisegment, side: Side) -> Tuple[Multisegment, int]:
    """Truncate every segment once; returns (multisegment, level)."""
    vec = (1,) * len(m)
    return apply_vector(m, vec, side), level(m)


def shifted(m: Multisegment, side: Side) -> Multisegment:
    """The nu^{+1/2} (right) or nu^{-1/2} (left) twist of a derivative."""
    from fractions import Fraction

    return m.shift(Fraction(1, 2) if side is Side.RIGHT else Fraction(-1, 2))


def check_csupp_containment(m: Multisegment, order: int) -> bool:
    """Support of the highest derivative sits inside every order-i candidate.

    Multiplicity-aware containment; vacuously true when the candidate set
    is empty.
    """
    hd, _ = highest_derivative(m, Side.RIGHT)
    base = hd.csupp()
    for cand in derivative_candidates(m, order, Side.RIGHT):
        sup = cand.csupp()
        if any(sup[p] < k for p, k in base.items()):
            return False
    return True


def generic_derivative_pieces(m: Multisegment, order: int, side: Side) -> frozenset:
    """Multi-step truncation pieces for a pairwise-unlinked (generic) multisegment."""
    from .core import linked

    segs = list(m)
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if linked(segs[i], segs[j]):
                raise ValueError("generic pieces need a pairwise-unlinked multisegment")
    choices = [range(s.rel_length + 1) for s in segs]
    out = set()
    for ks in product(*choices):
        if sum(k * s.line.size for k, s in zip(ks, segs)) != order:
            continue
        kept = [truncate(s, side, k) for k, s in zip(ks, segs)]
        out.add(mseg(*[t for t in kept if t is not None]))
    return frozenset(out)
