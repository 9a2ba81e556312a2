import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dyadgames.errors import ValidationError
from dyadgames.games import (
    MixedProfile,
    NormalFormGame,
    deviation_gain,
    enumerate_equilibria_2p,
    expected_payoff,
    is_equilibrium,
    pair_profile,
)
from dyadgames.scenarios import (
    FilmMatrixParams,
    film_game_symmetric,
    film_game_v1,
    my_way_game,
)


def random_game(rng, counts):
    shape = tuple(counts) + (len(counts),)
    return NormalFormGame(counts, rng.uniform(-10, 10, shape))


def random_profile(rng, counts):
    vecs = []
    for m in counts:
        v = rng.uniform(0, 1, m) + 1e-3
        vecs.append(v / v.sum())
    return MixedProfile(vecs)


class TestNormalFormGame:
    def test_from_profile_map(self):
        g = NormalFormGame((2, 2), {(0, 0): (1, 2), (0, 1): (3, 4), (1, 0): (5, 6), (1, 1): (7, 8)})
        assert g.player_count == 2
        assert g.payoff((1, 0)).tolist() == [5.0, 6.0]
        assert g.payoff_map()[(0, 1)] == [3.0, 4.0]

    def test_missing_profile_rejected(self):
        with pytest.raises(ValidationError, match="missing"):
            NormalFormGame((2, 2), {(0, 0): (1, 2), (0, 1): (3, 4), (1, 0): (5, 6)})

    def test_wrong_payoff_length_rejected(self):
        payoffs = {p: (0.0,) for p in itertools.product(range(2), range(2))}
        with pytest.raises(ValidationError, match="expected 2 payoffs"):
            NormalFormGame((2, 2), payoffs)

    def test_nonfinite_rejected(self):
        with pytest.raises(ValidationError, match="finite"):
            NormalFormGame((2,), {(0,): (np.inf,), (1,): (0.0,)})

    def test_three_players(self):
        payoffs = {p: (1.0, 2.0, 3.0) for p in itertools.product(range(2), range(2), range(3))}
        g = NormalFormGame((2, 2, 3), payoffs)
        assert g.payoff_tensor.shape == (2, 2, 3, 3)


class TestMixedProfile:
    def test_normalizes_on_construction(self):
        p = MixedProfile([[0.5, 0.5 + 5e-10]])
        assert p.strategies[0].sum() == 1.0

    def test_rejects_negative(self):
        with pytest.raises(ValidationError, match="negative"):
            MixedProfile([[1.1, -0.1]])

    def test_rejects_bad_sum(self):
        with pytest.raises(ValidationError, match="sum"):
            MixedProfile([[0.5, 0.6]])

    def test_pure(self):
        p = MixedProfile.pure((2, 3), (1, 2))
        assert p.strategies[0].tolist() == [0.0, 1.0]
        assert p.strategies[1].tolist() == [0.0, 0.0, 1.0]
        assert p.support() == ((1,), (2,))

    @given(st.lists(st.floats(0.01, 10.0), min_size=1, max_size=6))
    def test_simplex_closure(self, weights):
        total = sum(weights)
        p = MixedProfile([[w / total for w in weights]])
        v = p.strategies[0]
        assert (v >= 0).all()
        assert abs(v.sum() - 1.0) <= 1e-9


class TestExpectedPayoff:
    def test_film_v1_pure_gg(self):
        # both court the gorgeous woman
        assert expected_payoff(film_game_v1(), pair_profile(1, 1)).tolist() == [-1.0, -1.0]

    def test_my_way_diagonal_is_zero(self):
        g = my_way_game()
        for t in (0.0, 0.3, 1.0):
            assert expected_payoff(g, pair_profile(t, t)) == pytest.approx((0.0, 0.0))

    def test_film_v1_half_half(self):
        # closed forms x - 2xy and y - 2xy both vanish at (1/2, 1/2)
        assert expected_payoff(film_game_v1(), pair_profile(0.5, 0.5)) == pytest.approx((0.0, 0.0))

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError, match="players"):
            expected_payoff(film_game_v1(), MixedProfile([[1.0, 0.0]]))
        with pytest.raises(ValidationError, match="length"):
            expected_payoff(film_game_v1(), MixedProfile([[1.0, 0.0], [0.5, 0.25, 0.25]]))

    def test_linearity_in_single_player(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            counts = tuple(rng.integers(2, 4, size=rng.integers(2, 4)))
            g = random_game(rng, counts)
            base = random_profile(rng, counts)
            player = int(rng.integers(len(counts)))
            a = random_profile(rng, counts).strategies[player]
            b = random_profile(rng, counts).strategies[player]
            lam = float(rng.uniform())

            def swap(vec):
                vecs = list(base.strategies)
                vecs[player] = vec
                return MixedProfile(vecs)

            mixed = expected_payoff(g, swap(lam * a + (1 - lam) * b))
            split = lam * expected_payoff(g, swap(a)) + (1 - lam) * expected_payoff(g, swap(b))
            assert np.abs(mixed - split).max() <= 1e-9


class TestDeviationGain:
    def test_film_v1_at_equilibrium(self):
        assert deviation_gain(film_game_v1(), pair_profile(0, 1), 0) == 0.0

    def test_film_v1_at_pp(self):
        # switching to G against a P-partner earns 1 instead of 0
        assert deviation_gain(film_game_v1(), pair_profile(0, 0), 0) == pytest.approx(1.0)

    def test_my_way_at_mm(self):
        g = my_way_game()
        assert deviation_gain(g, pair_profile(1, 1), 0) == 0.0
        assert deviation_gain(g, pair_profile(1, 1), 1) == 0.0

    def test_bad_player_index(self):
        with pytest.raises(ValidationError, match="player"):
            deviation_gain(film_game_v1(), pair_profile(0, 0), 2)

    def test_pure_deviations_suffice(self):
        # no mixed deviation beats the best pure one; including the pure
        # vertices among the candidates makes the maxima equal
        rng = np.random.default_rng(23)
        for _ in range(20):
            counts = (int(rng.integers(2, 5)), int(rng.integers(2, 5)))
            g = random_game(rng, counts)
            profile = random_profile(rng, counts)
            player = int(rng.integers(2))
            m = counts[player]
            pure_gain = deviation_gain(g, profile, player)
            current = float(
                expected_payoff(g, profile)[player]
            )
            draws = rng.uniform(0, 1, (1000, m)) + 1e-9
            draws /= draws.sum(axis=1, keepdims=True)
            candidates = np.vstack([draws, np.eye(m)])
            best_candidate = -np.inf
            for sigma in candidates:
                vecs = list(profile.strategies)
                vecs[player] = sigma
                value = expected_payoff(g, MixedProfile(vecs))[player]
                best_candidate = max(best_candidate, float(value))
            assert best_candidate - current <= pure_gain + 1e-7
            assert abs(max(0.0, best_candidate - current) - pure_gain) <= 1e-7


class TestIsEquilibrium:
    def test_film_v1_(self):
        g = film_game_v1()
        assert is_equilibrium(g, pair_profile(1, 0))
        assert not is_equilibrium(g, pair_profile(0, 0))
        assert is_equilibrium(g, pair_profile(0.5, 0.5))

    def test_certificate_fields(self):
        report = is_equilibrium(film_game_v1(), pair_profile(1, 0))
        assert report.kind == "pure"
        assert report.max_deviation_gain <= 1e-9
        assert report.support == ((0,), (1,))
        assert report.payoffs == (1.0, 0.0)
        assert not report.degenerate

    def test_rejects_negative_tolerance(self):
        with pytest.raises(ValidationError, match="tolerance"):
            is_equilibrium(film_game_v1(), pair_profile(1, 0), tol=-1.0)


class TestEnumeration:
    def test_film_v1_three_equilibria(self):
        found = {
            tuple(np.round(np.concatenate(r.profile.strategies), 6))
            for r in enumerate_equilibria_2p(film_game_v1())
        }
        assert found == {
            (1.0, 0.0, 0.0, 1.0),  # x=1, y=0
            (0.0, 1.0, 1.0, 0.0),  # x=0, y=1
            (0.5, 0.5, 0.5, 0.5),
        }

    def test_my_way_unique(self):
        reports = enumerate_equilibria_2p(my_way_game())
        assert len(reports) == 1
        assert reports[0].support == ((0,), (0,))

    def test_film_v2_tied_payoff_regime(self):
        g = film_game_symmetric(FilmMatrixParams.equal_bc(a=1.0, c=3.0, d=0.0))
        found = {
            tuple(np.round(np.concatenate(r.profile.strategies), 6))
            for r in enumerate_equilibria_2p(g)
        }
        assert found == {(1.0, 0.0, 1.0, 0.0), (0.0, 1.0, 0.0, 1.0)}

    def test_all_zero_game_flags_degeneracy(self):
        g = film_game_symmetric(FilmMatrixParams(0.0, 0.0, 0.0, 0.0))
        reports = enumerate_equilibria_2p(g)
        assert reports
        assert all(r.degenerate for r in reports)

    def test_rejects_three_players(self):
        payoffs = {p: (0.0, 0.0, 0.0) for p in itertools.product(range(2), repeat=3)}
        with pytest.raises(ValidationError, match="2 players"):
            enumerate_equilibria_2p(NormalFormGame((2, 2, 2), payoffs))

    def test_rejects_large_game(self):
        rng = np.random.default_rng(0)
        with pytest.raises(ValidationError, match="6"):
            enumerate_equilibria_2p(random_game(rng, (7, 2)))

    def test_returned_profiles_pass_check(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            counts = (int(rng.integers(2, 4)), int(rng.integers(2, 4)))
            g = random_game(rng, counts)
            reports = enumerate_equilibria_2p(g)
            assert reports, "an equilibrium always exists"
            for r in reports:
                assert is_equilibrium(g, r.profile, tol=1e-7)

    def test_deduplication(self):
        # constant game: all four pure profiles appear once each, plus the
        # interior solutions from larger supports
        g = film_game_symmetric(FilmMatrixParams(2.0, 2.0, 2.0, 2.0))
        flats = [
            tuple(np.round(np.concatenate(r.profile.strategies), 8))
            for r in enumerate_equilibria_2p(g)
        ]
        assert len(flats) == len(set(flats))
