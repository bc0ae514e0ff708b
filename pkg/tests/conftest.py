from itertools import combinations_with_replacement

import pytest

from multiseg import Multisegment, mseg, seg

WINDOW = 4  # support exponents 0..4 on the character line
MAX_SEGMENTS = 4
MAX_DEGREE = 6


def build_family():
    """All multisegments on chr with support in [0,4], <=4 segments, degree <=6."""
    window = [
        seg(a, b) for a in range(WINDOW + 1) for b in range(a, WINDOW + 1)
    ]
    out = [mseg()]
    for k in range(1, MAX_SEGMENTS + 1):
        for combo in combinations_with_replacement(window, k):
            if sum(s.rel_length for s in combo) <= MAX_DEGREE:
                out.append(Multisegment(combo))
    return out


@pytest.fixture(scope="session")
def family():
    return build_family()
