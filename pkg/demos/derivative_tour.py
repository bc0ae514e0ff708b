"""A walk through the truncation calculus on a small multisegment.

Run:  python3 demos/derivative_tour.py
"""

from multiseg import (
    Side,
    derivative_candidates,
    highest_derivative,
    level,
    mseg,
    seg,
    shifted,
)


def main():
    m = mseg(seg(0, 1), seg(-1, 0), seg(0, 0), seg(-1, 1))
    print(f"multisegment      m = {m}")
    print(f"degree              = {m.degree}")
    print(f"level               = {level(m)}")

    right, _ = highest_derivative(m, Side.RIGHT)
    left, _ = highest_derivative(m, Side.LEFT)
    print(f"highest right     m^- = {right}")
    print(f"highest left      ^-m = {left}")
    print(f"level identity holds: {right.shift(1) == left}")
    print()

    for order in range(1, level(m)):
        cands = sorted(
            derivative_candidates(m, order, Side.RIGHT), key=lambda n: n.sort_key
        )
        print(f"order-{order} right candidates ({len(cands)}):")
        for n in cands:
            print(f"    {n}")
    print()
    print(f"shifted highest right derivative: {shifted(right, Side.RIGHT)}")


if __name__ == "__main__":
    main()
