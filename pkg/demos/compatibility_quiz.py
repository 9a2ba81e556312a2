"""Scoring the compatibility test, with the balance square in ASCII.

Two imaginary partners fill in the ten standard questions.  Partner 1
mostly gets their way; partner 2 compromises a lot.  We score the pair,
print the dominance verdict and satisfaction index, and draw the balance
square: the x axis is how often partner 1 gets their way, the y axis the
same for partner 2, and the diagonal is where balanced couples live.
"""

from dyadgames import PartnerResponse, default_form, score_uniform


def balance_square(x, y, size=11):
    rows = []
    for j in reversed(range(size)):
        cells = []
        for i in range(size):
            px, py = i / (size - 1), j / (size - 1)
            here = abs(px - x) < 0.5 / size and abs(py - y) < 0.5 / size
            if here:
                cells.append("*")
            elif abs(px - py) < 1e-9:
                cells.append("\\")
            else:
                cells.append("m" if py > px else "c")
        rows.append(" ".join(cells))
    return "\n".join(rows)


form = default_form()
partner1 = PartnerResponse(1, tuple((7, 2, 1) for _ in range(10)))
partner2 = PartnerResponse(2, tuple((3, 5, 2) for _ in range(10)))

report = score_uniform(form, partner1, partner2)

print(f"my-way points: X={report.X}, Y={report.Y}")
print(f"dominance: P1={report.P1}, P2={report.P2} -> {report.verdict.value}")
print(f"satisfaction: K1={report.K1}, K2={report.K2}, K={report.K} of {report.K_max}")
x, y = report.balance_point
print(f"balance point ({x:.2f}, {y:.2f}) sits in the {report.region.value} region\n")
print("c = partner 1 dominant, m = partner 2 dominant, \\ = balanced, * = this couple")
print(balance_square(x, y))
print("\nTop right (1,1) is the sweet spot: balanced AND maximally satisfied.")
