"""Named game instances used throughout the package.

These are the fixtures the rest of the toolkit is exercised against: the
two bar-scene courting games, the "my way or the highway" quiz model, and
the validated give/take payoff quadruple for the iterated dating dilemma.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .games import NormalFormGame

import math


@dataclass(frozen=True)
class FilmMatrixParams:
    """Entries of the symmetric 2x2 courting matrix.

    Rows and columns are (G, P): court the gorgeous woman or a pretty one.
    ``a`` is the both-court-G payoff, ``b`` both-court-P, ``c`` the payoff
    to the lone G-courter, ``d`` to the P-courter left watching.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"parameter {name} must be finite")

    @classmethod
    def equal_bc(cls, a: float, c: float, d: float) -> "FilmMatrixParams":
        """The jealousy-resolved regime: b = c with d < a < c enforced."""
        if not d < a < c:
            raise ValidationError(f"requires d < a < c, got d={d}, a={a}, c={c}")
        return cls(a=a, b=c, c=c, d=d)


def film_game_v1() -> NormalFormGame:
    """First guess at the bar-scene payoffs.

    Both courting G is a mutual failure (-1 each); the lone G-courter
    scores 1 while his buddy is content at 0; both picking P is neutral.
    """
    return NormalFormGame(
        (2, 2),
        {
            (0, 0): (-1.0, -1.0),
            (0, 1): (1.0, 0.0),
            (1, 0): (0.0, 1.0),
            (1, 1): (0.0, 0.0),
        },
    )


def film_game_symmetric(params: FilmMatrixParams) -> NormalFormGame:
    """The parametric symmetric courting game ((a,a),(c,d),(d,c),(b,b))."""
    return NormalFormGame(
        (2, 2),
        {
            (0, 0): (params.a, params.a),
            (0, 1): (params.c, params.d),
            (1, 0): (params.d, params.c),
            (1, 1): (params.b, params.b),
        },
    )


def pp_equilibrium_condition(params: FilmMatrixParams) -> bool:
    """Whether both-court-P is an equilibrium: holds iff c <= b.

    The lone deviation from (P, P) earns c instead of b, so (P, P) is
    stable exactly when that switch does not pay.  Weak inequality: a
    zero-gain deviation leaves the equilibrium intact.
    """
    return params.c <= params.b


def gg_equilibrium_condition(params: FilmMatrixParams) -> bool:
    """Whether both-court-G is an equilibrium: holds iff a >= d."""
    return params.a >= params.d


def my_way_game() -> NormalFormGame:
    """The zero-sum quiz model over strategies (M, H): my way or the highway.

    Getting your way against a yielding partner pays +1 to you and -1 to
    them; matched choices are neutral.  Expected payoffs are x - y and
    y - x in the two my-way probabilities, with unique equilibrium (M, M).
    """
    return NormalFormGame(
        (2, 2),
        {
            (0, 0): (0.0, 0.0),
            (0, 1): (1.0, -1.0),
            (1, 0): (-1.0, 1.0),
            (1, 1): (0.0, 0.0),
        },
    )


@dataclass(frozen=True)
class IDDPayoffs:
    """Give/take payoffs: W mutual give, X mutual take, Y lone taker,
    Z lone giver.

    Validated strictly: Y > W > X > Z, and mutual giving must beat the
    even-odds expectation of taking, W > (Y + Z) / 2.
    """

    W: float
    X: float
    Y: float
    Z: float

    def __post_init__(self):
        for name in ("W", "X", "Y", "Z"):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"payoff {name} must be finite")
        broken = []
        if not self.Y > self.W:
            broken.append(f"Y > W (Y={self.Y}, W={self.W})")
        if not self.W > self.X:
            broken.append(f"W > X (W={self.W}, X={self.X})")
        if not self.X > self.Z:
            broken.append(f"X > Z (X={self.X}, Z={self.Z})")
        if not self.W > (self.Y + self.Z) / 2.0:
            broken.append(f"W > (Y+Z)/2 (W={self.W}, (Y+Z)/2={(self.Y + self.Z) / 2.0})")
        if broken:
            raise ValidationError("violated: " + "; ".join(broken), issues=broken)


def idd_payoffs(W: float, X: float, Y: float, Z: float) -> IDDPayoffs:
    """Validated payoff quadruple; raises naming the violated inequality."""
    return IDDPayoffs(W=W, X=X, Y=Y, Z=Z)


# Conventional demo payoffs satisfying both ordering constraints.
DEFAULT_IDD_PAYOFFS = IDDPayoffs(W=3.0, X=1.0, Y=5.0, Z=0.0)
