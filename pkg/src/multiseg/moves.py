"""Union-intersection moves, their closure, and support decompositions.

Replacing two linked segments by their intersection and union generates,
from a starting multisegment, every parameter that can occur in the
product of the corresponding Zelevinsky representations.  The closure is
finite and computed by breadth-first saturation over canonical forms.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .core import CuspidalPoint, Multisegment, Segment, linked, point_precedes
from .derivatives import Side, truncate


@dataclass(frozen=True)
class UIStep:
    """One union-intersection move on a pair of linked canonical slots."""

    pair: Tuple[int, int]
    result: Multisegment
    union_length: int


def ui_steps(m: Multisegment) -> List[UIStep]:
    """All single moves, one per linked pair, in canonical index order."""
    segs = list(m)
    steps = []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            d1, d2 = segs[i], segs[j]
            if not linked(d1, d2):
                continue
            union = Segment(d1.line, min(d1.a, d2.a), max(d1.b, d2.b))
            rest = [s for k, s in enumerate(segs) if k not in (i, j)]
            ia, ib = max(d1.a, d2.a), min(d1.b, d2.b)
            if ia <= ib:
                rest.append(Segment(d1.line, ia, ib))
            rest.append(union)
            steps.append(UIStep((i, j), Multisegment(tuple(rest)), union.rel_length))
    return steps


def ui_chain_lengths(m: Multisegment) -> Dict[Multisegment, Tuple[int, ...]]:
    """Reachable multisegments with the union lengths along a first-found chain."""
    chains: Dict[Multisegment, Tuple[int, ...]] = {m: ()}
    frontier = deque([m])
    while frontier:
        cur = frontier.popleft()
        for step in ui_steps(cur):
            if step.result not in chains:
                chains[step.result] = chains[cur] + (step.union_length,)
                frontier.append(step.result)
    return chains


def ui_closure(m: Multisegment) -> frozenset:
    """All multisegments reachable by chains of union-intersection moves."""
    return frozenset(ui_chain_lengths(m))


def check_N_monotonicity(m: Multisegment, m_prime: Multisegment) -> Optional[int]:
    """Largest l with N(m',l) > N(m,l) and N(m',l') >= N(m,l') for all l' > l.

    Precondition: m' is a proper element of the union-intersection closure
    of m.  Returns None if no such l exists, which would contradict the
    length-count monotonicity of the moves.
    """
    if m_prime == m:
        raise ValueError("m' must differ from m")
    lengths = [s.rel_length for s in m] + [s.rel_length for s in m_prime]
    top = max(lengths, default=0)
    for l in range(top, 0, -1):
        if m_prime.count_by_length(l) <= m.count_by_length(l):
            continue
        if all(
            m_prime.count_by_length(lp) >= m.count_by_length(lp)
            for lp in range(l + 1, top + 1)
        ):
            return l
    return None


PointsLike = Union[Iterable[CuspidalPoint], Counter]


def generic_from_csupp(points: PointsLike) -> Multisegment:
    """The unique pairwise-unlinked multisegment with the given support.

    Works per line and Z-coset: the multiplicity profile of the support is
    sliced into level sets, and each maximal run of exponents with
    multiplicity >= h contributes one segment.
    """
    counts: Counter = Counter()
    if isinstance(points, Counter):
        counts.update(points)
    else:
        counts.update(points)
    groups: Dict[Tuple[str, Fraction], Counter] = {}
    lines = {}
    for p, k in counts.items():
        key = (p.line.id, p.exp % 1)
        groups.setdefault(key, Counter())[p.exp] += k
        lines[key] = p.line
    segs = []
    for key, mult in groups.items():
        line = lines[key]
        top = max(mult.values())
        for h in range(1, top + 1):
            exps = sorted(e for e, k in mult.items() if k >= h)
            run_start = None
            prev = None
            for e in exps + [None]:
                if run_start is None:
                    run_start = e
                elif e is None or e != prev + 1:
                    segs.append(Segment(line, run_start, prev))
                    run_start = e
                prev = e
    return Multisegment(tuple(segs))


def standard_to_singletons(m: Multisegment) -> List[CuspidalPoint]:
    """Extraction order of support points from repeated b-end peeling.

    Repeatedly pick a maximal point of the current support, take the
    shortest segment whose b-end realizes it, emit that point and replace
    the segment by its right truncation.  Ties are broken by canonical
    order; the emitted sequence lists the full support.
    """
    work = list(m)
    out: List[CuspidalPoint] = []
    while work:
        work.sort(key=lambda s: s.sort_key)
        # maximal exponent per (line, coset) group; then the canonically first group
        groups: Dict[Tuple[str, Fraction], Fraction] = {}
        lines = {}
        for s in work:
            for p in s.points():
                key = (p.line.id, p.exp % 1)
                if key not in groups or p.exp > groups[key]:
                    groups[key] = p.exp
                    lines[key] = p.line
        key = min(groups, key=lambda k: (k[0], -groups[k]))
        target = CuspidalPoint(lines[key], groups[key])
        with_b = [s for s in work if s.b_point == target]
        shortest = min(s.rel_length for s in with_b)
        chosen = next(s for s in with_b if s.rel_length == shortest)
        out.append(target)
        work.remove(chosen)
        t = truncate(chosen, Side.RIGHT, 1)
        if t is not None:
            work.append(t)
    return out
