"""Finite non-cooperative games in normal form.

A game stores one real payoff per player per pure-strategy profile as a
dense tensor whose leading axes are the players' pure strategies and whose
final axis selects the player.  Mixed strategies are probability vectors on
the simplex; expected payoff is the multilinear extension of the tensor.

The equilibrium condition is "no player can gain by a unilateral change".
Because expected payoff is linear in any single player's mixture, it is
enough to check pure deviations, which is what ``deviation_gain`` does.
Two-player enumeration works by support enumeration: guess the strategies
played with positive probability, solve the indifference equations, and
keep on-simplex solutions that survive the equilibrium check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

CHECK_TOL = 1e-9
ENUM_TOL = 1e-7
DEDUP_TOL = 1e-7
MAX_ENUM_STRATEGIES = 6


class NormalFormGame:
    """An n-player game over finite pure-strategy sets.

    ``payoffs`` may be given as a mapping from pure profiles (one index per
    player) to length-n payoff lists, or as a ready tensor of shape
    ``(*strategy_counts, n)``.  Every profile must be present exactly once
    and every payoff must be finite.
    """

    def __init__(self, strategy_counts, payoffs):
        counts = tuple(int(m) for m in strategy_counts)
        if not counts or any(m < 1 for m in counts):
            raise ValidationError("strategy_counts must be positive integers")
        n = len(counts)
        if isinstance(payoffs, dict):
            tensor = np.full(counts + (n,), np.nan)
            seen = set()
            for profile, values in payoffs.items():
                profile = tuple(int(i) for i in profile)
                if len(profile) != n or any(
                    not 0 <= i < m for i, m in zip(profile, counts)
                ):
                    raise ValidationError(f"profile {profile} out of range for {counts}")
                if profile in seen:
                    raise ValidationError(f"profile {profile} defined twice")
                seen.add(profile)
                values = np.asarray(values, dtype=float)
                if values.shape != (n,):
                    raise ValidationError(
                        f"profile {profile}: expected {n} payoffs, got {values.shape}"
                    )
                tensor[profile] = values
            if len(seen) != int(np.prod(counts)):
                missing = next(
                    p for p in itertools.product(*map(range, counts)) if p not in seen
                )
                raise ValidationError(f"payoffs missing for profile {missing}")
        else:
            tensor = np.asarray(payoffs, dtype=float)
            if tensor.shape != counts + (n,):
                raise ValidationError(
                    f"payoff tensor shape {tensor.shape} != {counts + (n,)}"
                )
            tensor = tensor.copy()
        if not np.isfinite(tensor).all():
            raise ValidationError("payoffs must all be finite")
        tensor.flags.writeable = False
        self.strategy_counts = counts
        self.payoff_tensor = tensor

    @property
    def player_count(self) -> int:
        return len(self.strategy_counts)

    def payoff(self, profile) -> np.ndarray:
        """Payoff vector at a pure profile."""
        return self.payoff_tensor[tuple(profile)]

    def payoff_map(self) -> dict:
        """The payoffs as a {pure profile: [payoff per player]} mapping."""
        return {
            p: self.payoff_tensor[p].tolist()
            for p in itertools.product(*map(range, self.strategy_counts))
        }

    def __repr__(self):
        return f"NormalFormGame(strategy_counts={self.strategy_counts})"


class MixedProfile:
    """One probability vector per player.

    Entries must be nonnegative (tiny negatives from floating-point noise,
    above -1e-9, are clamped) and each vector must sum to 1 within 1e-9;
    vectors are renormalized to sum exactly to 1 on construction.
    """

    def __init__(self, strategies):
        vecs = []
        for i, raw in enumerate(strategies):
            v = np.asarray(raw, dtype=float).copy()
            if v.ndim != 1 or v.size == 0:
                raise ValidationError(f"player {i + 1}: strategy must be a nonempty vector")
            if not np.isfinite(v).all():
                raise ValidationError(f"player {i + 1}: strategy entries must be finite")
            if (v < -1e-9).any():
                raise ValidationError(f"player {i + 1}: negative probability {v.min()}")
            v = np.clip(v, 0.0, None)
            s = v.sum()
            if abs(s - 1.0) > 1e-9:
                raise ValidationError(f"player {i + 1}: probabilities sum to {s}, not 1")
            v /= s
            v.flags.writeable = False
            vecs.append(v)
        self.strategies = tuple(vecs)

    @classmethod
    def pure(cls, strategy_counts, indices) -> "MixedProfile":
        """The profile that plays the given pure strategy per player."""
        vecs = []
        for m, i in zip(strategy_counts, indices):
            v = np.zeros(m)
            v[i] = 1.0
            vecs.append(v)
        return cls(vecs)

    def support(self, tol: float = 1e-9):
        """Indices with probability above ``tol``, per player."""
        return tuple(
            tuple(int(j) for j in np.nonzero(v > tol)[0]) for v in self.strategies
        )

    def __repr__(self):
        inner = ", ".join(str(np.round(v, 6).tolist()) for v in self.strategies)
        return f"MixedProfile([{inner}])"


def pair_profile(x: float, y: float) -> MixedProfile:
    """2x2 profile from the two first-strategy probabilities (x, y)."""
    return MixedProfile([[x, 1.0 - x], [y, 1.0 - y]])


@dataclass(frozen=True)
class EquilibriumReport:
    """Certificate for an equilibrium check.

    ``max_deviation_gain`` is the largest payoff any single player could
    add by switching to one of their pure strategies.  ``degenerate`` is
    set when some player has more pure best responses than the size of
    their own support, the signature of equilibrium components of positive
    dimension (such profiles are reported through their vertices).
    """

    profile: MixedProfile
    max_deviation_gain: float
    support: tuple
    kind: str  # "pure" | "mixed"
    equilibrium: bool
    tolerance: float
    payoffs: tuple = field(default=())
    degenerate: bool = False

    def __bool__(self) -> bool:
        return self.equilibrium


def _check_dimensions(game: NormalFormGame, profile: MixedProfile) -> None:
    if len(profile.strategies) != game.player_count:
        raise ValidationError(
            f"profile has {len(profile.strategies)} players, game has {game.player_count}"
        )
    for i, (v, m) in enumerate(zip(profile.strategies, game.strategy_counts)):
        if v.size != m:
            raise ValidationError(
                f"player {i + 1}: strategy length {v.size} != {m} pure strategies"
            )


def expected_payoff(game: NormalFormGame, profile: MixedProfile) -> np.ndarray:
    """Expected payoff vector (one entry per player) at a mixed profile."""
    _check_dimensions(game, profile)
    t = game.payoff_tensor
    for v in profile.strategies:
        t = np.tensordot(v, t, axes=(0, 0))
    return t


def pure_response_payoffs(game: NormalFormGame, profile: MixedProfile, player: int) -> np.ndarray:
    """Player's expected payoff for each of their pure strategies, with
    everyone else playing the profile."""
    _check_dimensions(game, profile)
    if not 0 <= player < game.player_count:
        raise ValidationError(f"no player {player} in a {game.player_count}-player game")
    t = np.moveaxis(game.payoff_tensor[..., player], player, 0)
    for i, v in enumerate(profile.strategies):
        if i == player:
            continue
        t = np.tensordot(t, v, axes=(1, 0))
    return t


def deviation_gain(game: NormalFormGame, profile: MixedProfile, player: int) -> float:
    """Best payoff improvement the player can get by a unilateral switch.

    Maximized over pure strategies only; linearity makes that exhaustive.
    Mathematically nonnegative, so tiny negative rounding noise is clamped
    to zero.
    """
    responses = pure_response_payoffs(game, profile, player)
    current = float(responses @ profile.strategies[player])
    return max(0.0, float(responses.max()) - current)


def is_equilibrium(game: NormalFormGame, profile: MixedProfile, tol: float = CHECK_TOL) -> EquilibriumReport:
    """Check the no-profitable-deviation condition; returns a certificate.

    The report is truthy exactly when every player's deviation gain is at
    most ``tol``.
    """
    if tol < 0:
        raise ValidationError("tolerance must be nonnegative")
    _check_dimensions(game, profile)
    max_gain = 0.0
    degenerate = False
    support = profile.support()
    for player in range(game.player_count):
        responses = pure_response_payoffs(game, profile, player)
        current = float(responses @ profile.strategies[player])
        gain = max(0.0, float(responses.max()) - current)
        max_gain = max(max_gain, gain)
        n_best = int(np.sum(responses >= responses.max() - max(tol, 1e-12)))
        if n_best > len(support[player]):
            degenerate = True
    return EquilibriumReport(
        profile=profile,
        max_deviation_gain=max_gain,
        support=support,
        kind="pure" if all(len(s) == 1 for s in support) else "mixed",
        equilibrium=max_gain <= tol,
        tolerance=tol,
        payoffs=tuple(float(v) for v in expected_payoff(game, profile)),
        degenerate=degenerate,
    )


def _indifference_solution(utilities: np.ndarray, own_support, other_support):
    """Solve for the *other* player's weights that equalize ``utilities``
    over ``own_support``.

    ``utilities[i, j]`` is the payoff to the player being made indifferent
    when they play i and the other plays j.  Returns the weight vector over
    ``other_support`` or None when the system has no isolated solution
    (singular or inconsistent).  Rank-deficient consistent systems describe
    solution segments; their vertices always have a smaller support, so
    they are picked up when those supports are enumerated.
    """
    own = list(own_support)
    other = list(other_support)
    rows = [utilities[own[0], other] - utilities[i, other] for i in own[1:]]
    rows.append(np.ones(len(other)))
    a = np.vstack(rows)
    b = np.zeros(len(own))
    b[-1] = 1.0
    if np.linalg.matrix_rank(a, tol=1e-10) < len(other):
        return None
    solution, residual, _, _ = np.linalg.lstsq(a, b, rcond=None)
    if np.linalg.norm(a @ solution - b) > 1e-9:
        return None
    return solution


def enumerate_equilibria_2p(
    game: NormalFormGame, tol: float = ENUM_TOL, dedup_tol: float = DEDUP_TOL
) -> list[EquilibriumReport]:
    """All equilibria of a small two-player game by support enumeration.

    Every pair of supports (equal or unequal sizes) is tried; candidates
    must land on the simplex and pass ``is_equilibrium`` at ``tol``.
    Profiles whose concatenated strategy vectors differ by less than
    ``dedup_tol`` in any entry are reported once.  Games with equilibrium
    segments are reported through the segments' vertex profiles, each
    flagged ``degenerate``.
    """
    if game.player_count != 2:
        raise ValidationError(
            f"support enumeration handles 2 players, game has {game.player_count}"
        )
    m1, m2 = game.strategy_counts
    if m1 > MAX_ENUM_STRATEGIES or m2 > MAX_ENUM_STRATEGIES:
        raise ValidationError(
            f"support enumeration limited to {MAX_ENUM_STRATEGIES} strategies per player"
        )
    u1 = game.payoff_tensor[..., 0]
    u2 = game.payoff_tensor[..., 1]

    def supports(m):
        for size in range(1, m + 1):
            yield from itertools.combinations(range(m), size)

    reports: list[EquilibriumReport] = []
    for s1 in supports(m1):
        for s2 in supports(m2):
            y = _indifference_solution(u1, s1, s2)
            x = _indifference_solution(u2.T, s2, s1)
            if x is None or y is None:
                continue
            if (x < -1e-9).any() or (y < -1e-9).any():
                continue
            full_x = np.zeros(m1)
            full_x[list(s1)] = np.clip(x, 0.0, None)
            full_y = np.zeros(m2)
            full_y[list(s2)] = np.clip(y, 0.0, None)
            try:
                profile = MixedProfile([full_x, full_y])
            except ValidationError:
                continue
            report = is_equilibrium(game, profile, tol)
            if not report:
                continue
            flat = np.concatenate(profile.strategies)
            duplicate = any(
                np.max(np.abs(flat - np.concatenate(r.profile.strategies))) < dedup_tol
                for r in reports
            )
            if not duplicate:
                reports.append(report)
    return reports
