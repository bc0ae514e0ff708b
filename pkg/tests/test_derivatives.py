import pytest
from fractions import Fraction

from multiseg import (
    CuspidalLine,
    Segment,
    Side,
    check_csupp_containment,
    derivative_candidates,
    dual,
    generic_derivative_pieces,
    highest_derivative,
    level,
    mseg,
    seg,
    shifted,
    truncate,
    truncate_order,
)

RHO2 = CuspidalLine("rho2", 2)


def test_truncate_right_and_left():
    assert truncate(seg(0, 2), Side.RIGHT, 1) == seg(0, 1)
    assert truncate(seg(0, 2), Side.LEFT, 2) == seg(2, 2)
    assert truncate(seg(0, 2), Side.RIGHT, 3) is None
    assert truncate(seg(5), Side.LEFT, 1) is None


def test_truncate_order_respects_line_size():
    d = Segment(RHO2, Fraction(0), Fraction(1))
    assert truncate_order(d, Side.RIGHT, 1) is None
    assert truncate_order(d, Side.RIGHT, 2) == Segment(RHO2, Fraction(0), Fraction(0))


def test_candidates_basic():
    m = mseg(seg(0, 1), seg(2, 2))
    assert derivative_candidates(m, 1, Side.RIGHT) == frozenset(
        {mseg(seg(0, 0), seg(2, 2)), mseg(seg(0, 1))}
    )
    assert derivative_candidates(m, 0, Side.RIGHT) == frozenset({m})
    assert derivative_candidates(mseg(seg(0, 0), seg(1, 1)), 1, Side.LEFT) == frozenset(
        {mseg(seg(1, 1)), mseg(seg(0, 0))}
    )


def test_candidates_empty_beyond_level():
    m = mseg(seg(0, 1), seg(2, 2))
    assert derivative_candidates(m, level(m) + 1, Side.RIGHT) == frozenset()


def test_highest_derivative():
    assert highest_derivative(mseg(seg(0, 1), seg(1, 1)), Side.RIGHT) == (
        mseg(seg(0, 0)),
        2,
    )
    assert highest_derivative(mseg(seg(0, 4)), Side.RIGHT) == (mseg(seg(0, 3)), 1)
    assert highest_derivative(mseg(), Side.RIGHT) == (mseg(), 0)


def test_level_counts_line_sizes():
    m = mseg(seg(0, 1), Segment(RHO2, Fraction(0), Fraction(0)))
    assert level(m) == 3


def test_shifted():
    assert shifted(mseg(seg(0, 0)), Side.RIGHT) == mseg(seg("1/2"))
    assert shifted(mseg(seg(1, 1)), Side.LEFT) == mseg(seg("1/2"))
    assert shifted(mseg(), Side.RIGHT) == mseg()


def test_candidates_at_level_is_the_highest_derivative(family):
    for m in family[:300]:
        hd, lev = highest_derivative(m, Side.RIGHT)
        if lev:
            assert derivative_candidates(m, lev, Side.RIGHT) == frozenset({hd})


def test_candidate_degree_and_support(family):
    for m in family[:300]:
        for i in range(1, level(m) + 1):
            for n in derivative_candidates(m, i, Side.RIGHT):
                assert n.degree == m.degree - i
                sup, base = n.csupp(), m.csupp()
                assert all(base[p] >= k for p, k in sup.items())


def test_left_right_duality(family):
    for m in family[:200]:
        for i in range(1, level(m) + 1):
            left = derivative_candidates(dual(m), i, Side.LEFT)
            right = derivative_candidates(m, i, Side.RIGHT)
            assert left == frozenset(dual(n) for n in right)


def test_csupp_containment_examples():
    assert check_csupp_containment(mseg(seg(0, 1), seg(1, 1)), 1)
    m = mseg(seg(0, 2), seg(1, 1))
    assert check_csupp_containment(m, level(m))
    assert check_csupp_containment(m, 0)


def test_generic_pieces():
    assert generic_derivative_pieces(mseg(seg(0, 2)), 2, Side.LEFT) == frozenset(
        {mseg(seg(2, 2))}
    )
    assert generic_derivative_pieces(
        mseg(seg(0, 0), seg(2, 2)), 1, Side.LEFT
    ) == frozenset({mseg(seg(2, 2)), mseg(seg(0, 0))})
    m = mseg(seg(0, 1), seg(3, 3))
    assert generic_derivative_pieces(m, 0, Side.RIGHT) == frozenset({m})


def test_generic_pieces_reject_linked():
    with pytest.raises(ValueError):
        generic_derivative_pieces(mseg(seg(0, 1), seg(1, 2)), 1, Side.RIGHT)
