"""Decidable classifications: genericity, projectivity of restriction,
one-dimensionality, branching necessary conditions, Bernstein components
of a restriction, and the left/right derivative disjointness checker.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from .core import Multisegment, Segment, linked
from .derivatives import (
    Side,
    apply_vector,
    highest_derivative,
    level,
    truncation_vectors,
)
from .speh import prefix_candidates, speh_decompose


def is_generic_St(m: Multisegment) -> bool:
    """St(m) is generic iff all pairs of segments are unlinked."""
    segs = list(m)
    return all(
        not linked(segs[i], segs[j])
        for i in range(len(segs))
        for j in range(i + 1, len(segs))
    )


def is_relatively_projective(m: Multisegment) -> bool:
    """Restriction of St(m) one group size down stays projective.

    Holds exactly when m is a single segment (essentially
    square-integrable), or two unlinked singletons of equal absolute size
    (a product of two cuspidals of the half-size group).
    """
    segs = list(m)
    if len(segs) == 1:
        return True
    if len(segs) != 2:
        return False
    d1, d2 = segs
    return (
        d1.rel_length == 1
        and d2.rel_length == 1
        and not linked(d1, d2)
        and d1.abs_length == d2.abs_length
    )


def is_one_dimensional(m: Multisegment) -> bool:
    """A single segment on a size-1 line labels a character of det."""
    segs = list(m)
    return len(segs) == 1 and segs[0].line.size == 1


def hom_opposite_nonzero(m_up: Multisegment, m_down: Multisegment) -> bool:
    """Branching in the opposite direction: only characters restrict to characters.

    m_up labels a representation one group size above m_down; nonzero Hom
    from below requires both to be one-dimensional on the same character
    line with the same center.
    """
    n_up, n_down = m_up.degree, m_down.degree
    if n_up != n_down + 1:
        raise ValueError(f"degrees must differ by one, got {n_up} and {n_down}")
    if not (is_one_dimensional(m_up) and is_one_dimensional(m_down)):
        return False
    (up,) = m_up
    (down,) = m_down
    return (
        up.line == down.line
        and up.rel_length == n_up
        and down.rel_length == n_down
        and up.a + up.b == down.a + down.b
    )


def generic_hom_necessary(m_down: Multisegment) -> bool:
    """Necessary for Hom from a generic restriction: all relative lengths <= 2."""
    return all(s.rel_length <= 2 for s in m_down)


LineClass = Tuple[str, int]


@dataclass(frozen=True)
class ComponentSpec:
    """Which Bernstein components of the restriction are nonzero.

    ``mandatory`` is the multiset of inertial classes (line id, size)
    carried by the support of the shifted highest derivative; the
    remaining ``free_budget`` of the ambient group size may be filled by
    arbitrary cuspidal classes.
    """

    mandatory: Tuple[LineClass, ...]
    free_budget: int
    ambient: int

    def __post_init__(self) -> None:
        total = sum(size for _, size in self.mandatory) + self.free_budget
        if total != self.ambient:
            raise ValueError(
                f"mandatory sizes plus budget {total} != ambient {self.ambient}"
            )


def restriction_components(m: Multisegment) -> ComponentSpec:
    """Component spec for restricting the representation labelled by m."""
    n = m.degree - 1
    hd, _ = highest_derivative(m, Side.RIGHT)
    classes = []
    for p, k in sorted(hd.csupp().items(), key=lambda it: (it[0].line.id, it[0].exp)):
        classes.extend([(p.line.id, p.line.size)] * k)
    classes.sort()
    return ComponentSpec(tuple(classes), n - hd.degree, n)


def component_nonzero(spec: ComponentSpec, s: Iterable[LineClass]) -> bool:
    """Whether the inertial class multiset s supports a nonzero component."""
    s_counts = Counter(s)
    total = sum(size * k for (_, size), k in s_counts.items())
    if total != spec.ambient:
        raise ValueError(f"class sizes sum to {total}, ambient is {spec.ambient}")
    need = Counter(spec.mandatory)
    return all(s_counts[cls] >= k for cls, k in need.items())


class Verdict(Enum):
    LEVEL_CASE = "LevelCase"
    CERTIFIED_DISJOINT = "CertifiedDisjoint"
    UNDECIDED = "Undecided"


class Obstruction(Enum):
    SPEH_PREFIX = "SpehPrefix"
    COUNT = "CountObstruction"


Vec = Tuple[int, ...]


@dataclass(frozen=True)
class Elimination:
    pair: Tuple[Vec, Vec]
    reason: Obstruction
    detail: str = ""


@dataclass(frozen=True)
class AsymmetryReport:
    """Outcome of the derivative-disjointness check at one order.

    ``naive_pairs`` lists all (right, left) truncation vectors whose
    results coincide after the unit shift; each is either eliminated by a
    recorded obstruction or survives, in which case the verdict is
    Undecided.
    """

    order: int
    verdict: Verdict
    naive_pairs: Tuple[Tuple[Vec, Vec], ...] = ()
    eliminations: Tuple[Elimination, ...] = ()
    survivors: Tuple[Tuple[Vec, Vec], ...] = ()
    L_choice: Optional[int] = None


def asymmetry_check(m: Multisegment, order: int) -> AsymmetryReport:
    """Certify that shifted left and right derivatives at this order are disjoint.

    At the level the two shifted highest derivatives agree termwise
    (LevelCase).  Otherwise every naive coincidence pair must be
    eliminated, first by the exact shape of Speh block derivatives, then
    by comparing counts of segments containing the shifted pivot segment
    against the special segments; a surviving pair yields Undecided.
    """
    lev = level(m)
    if order == lev:
        ones = (1,) * len(m)
        return AsymmetryReport(
            order, Verdict.LEVEL_CASE, naive_pairs=((ones, ones),)
        )

    rights = [
        (vec, apply_vector(m, vec, Side.RIGHT))
        for vec in truncation_vectors(m, order)
    ]
    lefts = [
        (vec, apply_vector(m, vec, Side.LEFT))
        for vec in truncation_vectors(m, order)
    ]
    pairs = [
        (e, f)
        for e, r in rights
        for f, l in lefts
        if r.shift(1) == l
    ]
    if not pairs:
        return AsymmetryReport(order, Verdict.CERTIFIED_DISJOINT)

    r_ok = prefix_candidates(m, order, Side.RIGHT)
    l_ok = prefix_candidates(m, order, Side.LEFT)
    blocks = speh_decompose(m).blocks
    segs = list(m)
    eliminations: List[Elimination] = []
    survivors: List[Tuple[Vec, Vec]] = []
    l_choice: Optional[int] = None
    for e, f in pairs:
        r_ms = apply_vector(m, e, Side.RIGHT)
        l_ms = apply_vector(m, f, Side.LEFT)
        if r_ms not in r_ok or l_ms not in l_ok:
            eliminations.append(Elimination((e, f), Obstruction.SPEH_PREFIX))
            continue
        kept = [k for k in range(len(segs)) if e[k] == 0 or f[k] == 0]
        if not kept:
            survivors.append((e, f))
            continue
        L = max(segs[k].rel_length for k in kept)
        l_choice = L if l_choice is None else max(l_choice, L)
        pivots = [b.top for b in blocks if b.rel_length == L]
        # Specials are the one-step right truncations of the strictly longer
        # segments; a genuine coincidence needs the pivot-containing count in
        # the common multisegment to exceed the special count (right-side
        # filtration) and to equal it (left-side filtration) simultaneously.
        pivot = pivots[0]
        contains_count = sum(1 for d in r_ms if d.contains(pivot))
        special_count = sum(
            1
            for d in segs
            if d.rel_length >= L + 1
            and Segment(d.line, d.a, d.b - 1).contains(pivot)
        )
        right_needs = contains_count >= special_count + 1
        left_needs = contains_count == special_count
        if not (right_needs and left_needs):
            eliminations.append(
                Elimination(
                    (e, f),
                    Obstruction.COUNT,
                    detail=(
                        f"L={L}, pivot={pivot}, contains={contains_count}, "
                        f"special={special_count}"
                    ),
                )
            )
        else:  # pragma: no cover - the two requirements are mutually exclusive
            survivors.append((e, f))
    verdict = Verdict.CERTIFIED_DISJOINT if not survivors else Verdict.UNDECIDED
    return AsymmetryReport(
        order,
        verdict,
        naive_pairs=tuple(pairs),
        eliminations=tuple(eliminations),
        survivors=tuple(survivors),
        L_choice=l_choice,
    )
