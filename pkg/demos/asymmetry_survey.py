"""Survey the left/right derivative disjointness checker on small inputs.

For every multisegment on the character line with support in [0,3] and at
most 3 segments, run the asymmetry check at every order below the level
and tally which verdicts and obstructions occur.

Run:  python3 demos/asymmetry_survey.py
"""

from collections import Counter
from itertools import combinations_with_replacement

from multiseg import Multisegment, Verdict, asymmetry_check, level, seg


def main():
    window = [seg(a, b) for a in range(4) for b in range(a, 4)]
    family = [
        Multisegment(combo)
        for k in range(1, 4)
        for combo in combinations_with_replacement(window, k)
    ]

    verdicts = Counter()
    obstructions = Counter()
    for m in family:
        for order in range(level(m)):
            report = asymmetry_check(m, order)
            verdicts[report.verdict.value] += 1
            for e in report.eliminations:
                obstructions[e.reason.value] += 1

    print(f"instances checked: {sum(verdicts.values())}")
    for name, count in sorted(verdicts.items()):
        print(f"  verdict {name}: {count}")
    for name, count in sorted(obstructions.items()):
        print(f"  obstruction {name}: {count}")

    undecided = verdicts[Verdict.UNDECIDED.value]
    print(f"undecided: {undecided} (expected 0)")


if __name__ == "__main__":
    main()
