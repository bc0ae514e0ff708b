"""Reproduce a composition-factor search with union-intersection moves.

Starting from m = {[0,1],[-1,0],[0],[-1,1]} on the character line, take all
order-2 right-derivative candidates, saturate each under union-intersection
moves, and keep the results with cuspidal support {-1,-1,0,0,0,1}.

Run:  python3 demos/composition_factors.py
"""

from collections import Counter
from fractions import Fraction

from multiseg import (
    CHR,
    CuspidalPoint,
    Side,
    derivative_candidates,
    mseg,
    seg,
    ui_closure,
)


def main():
    m = mseg(seg(0, 1), seg(-1, 0), seg(0, 0), seg(-1, 1))
    print(f"start: {m}  (degree {m.degree})")

    target = Counter(
        {
            CuspidalPoint(CHR, Fraction(-1)): 2,
            CuspidalPoint(CHR, Fraction(0)): 3,
            CuspidalPoint(CHR, Fraction(1)): 1,
        }
    )

    reachable = set()
    for n in derivative_candidates(m, 2, Side.RIGHT):
        reachable.update(ui_closure(n))

    matching = sorted(
        (n for n in reachable if n.csupp() == target), key=lambda n: n.sort_key
    )
    print(f"reachable parameters with the target support ({len(matching)}):")
    for n in matching:
        print(f"    {n}")


if __name__ == "__main__":
    main()
