"""The bar scene, solved.

Two men, one gorgeous woman, two pretty ones.  Each man either courts the
gorgeous woman (G) or a pretty one (P).  We enumerate every equilibrium of
the first-guess payoff matrix, see that it contradicts the everybody-
courts-P folklore, then repair the matrix with tied payoffs (b = c) and
check which profiles survive.
"""

import numpy as np

from dyadgames import (
    FilmMatrixParams,
    enumerate_equilibria_2p,
    film_game_symmetric,
    film_game_v1,
    gg_equilibrium_condition,
    pp_equilibrium_condition,
)


def show(game, title):
    print(f"\n{title}")
    print("payoff matrix (rows/cols G, P):")
    for i in range(2):
        row = "   ".join(str(tuple(game.payoff((i, j)).tolist())) for j in range(2))
        print(f"  {row}")
    for k, report in enumerate(enumerate_equilibria_2p(game), start=1):
        x = report.profile.strategies[0][0]
        y = report.profile.strategies[1][0]
        extra = ", degenerate" if report.degenerate else ""
        print(
            f"  equilibrium {k}: x={x:.3g}, y={y:.3g} "
            f"({report.kind}{extra}), payoffs {np.round(report.payoffs, 3).tolist()}"
        )


show(film_game_v1(), "First guess: lone G-courter wins")
print(
    "-> the equilibria are asymmetric (one man courts G!) plus a mixed one;"
    "\n   nobody-courts-G is NOT an equilibrium of this matrix."
)

params = FilmMatrixParams.equal_bc(a=1.0, c=3.0, d=0.0)
show(film_game_symmetric(params), "Repaired matrix with b = c (jealousy discounts the lone win)")
print(
    f"-> both-P is an equilibrium iff c <= b: {pp_equilibrium_condition(params)};"
    f"\n   both-G sneaks in as well whenever a >= d: {gg_equilibrium_condition(params)}."
)
