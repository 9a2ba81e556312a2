"""Acceptance suite: one test per shipped guarantee, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
Every tolerance is pinned here; nothing is deferred to later calibration.
"""

import json
import random
import tempfile
import time

import numpy as np
from fastapi.testclient import TestClient

from dyadgames import documents
from dyadgames.games import (
    NormalFormGame,
    enumerate_equilibria_2p,
    is_equilibrium,
    pair_profile,
)
from dyadgames.idd import (
    MemoryOneStrategy,
    TableStrategy,
    _lift_table,
    _simulate_tables,
    check_no_self_control,
    determinant_score,
    payoff_vectors,
    stationary_scores,
    zd_equalizer,
)
from dyadgames.errors import InfeasibleTargetError
from dyadgames.quiz import (
    PartnerResponse,
    Question,
    QuizForm,
    Verdict,
    default_form,
    score_uniform,
    score_weighted,
)
from dyadgames.scenarios import (
    DEFAULT_IDD_PAYOFFS,
    FilmMatrixParams,
    film_game_symmetric,
    film_game_v1,
    my_way_game,
)
from dyadgames.service import STATE_COMPLETE, STATE_CREATED, STATE_ONE_SUBMITTED, SessionStore, create_app


def criterion(name: str, ok: bool, detail: str = "") -> None:
    print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else ""))
    assert ok, f"{name}: {detail}"


def flat(profile) -> tuple:
    return tuple(np.round(np.concatenate(profile.strategies), 6))


def random_response(rng, form: QuizForm, partner_id: int) -> PartnerResponse:
    triples = []
    for q in form.questions:
        total = q.total_for(partner_id)
        a = int(rng.integers(0, total + 1))
        b = int(rng.integers(0, total - a + 1))
        triples.append((a, b, total - a - b))
    return PartnerResponse(partner_id=partner_id, answers=tuple(triples))


def test_film_v1_equilibria():
    start = time.monotonic()
    reports = enumerate_equilibria_2p(film_game_v1())
    elapsed = time.monotonic() - start
    found = {flat(r.profile) for r in reports}
    expected = {
        (0.0, 1.0, 1.0, 0.0),  # x=0, y=1
        (1.0, 0.0, 0.0, 1.0),  # x=1, y=0
        (0.5, 0.5, 0.5, 0.5),  # the mixed one the exercise answer omits
    }
    gains_ok = all(r.max_deviation_gain <= 1e-7 for r in reports)
    criterion(
        "film v1 equilibria {(0,1), (1,0), (1/2,1/2)} at tol 1e-7 in < 1 s",
        found == expected and gains_ok and elapsed < 1.0,
        f"{len(found)} equilibria, {elapsed * 1000:.0f} ms",
    )


def test_pp_condition_matches_equilibrium_check():
    rng = np.random.default_rng(101)
    disagreements = 0
    for _ in range(500):
        params = FilmMatrixParams(*rng.uniform(-10, 10, 4))
        game = film_game_symmetric(params)
        closed_form = params.c <= params.b
        direct = bool(is_equilibrium(game, pair_profile(0, 0)))
        disagreements += closed_form != direct
    criterion(
        "(P,P) condition c <= b matches the direct check on 500 random draws",
        disagreements == 0,
        f"{disagreements} disagreements",
    )


def test_gg_condition_and_tied_payoff_regime():
    rng = np.random.default_rng(202)
    disagreements = 0
    for _ in range(500):
        a, c, d = rng.uniform(-10, 10, 3)
        params = FilmMatrixParams(a=a, b=c, c=c, d=d)
        game = film_game_symmetric(params)
        closed_form = params.a >= params.d
        direct = bool(is_equilibrium(game, pair_profile(1, 1)))
        disagreements += closed_form != direct
    regime_ok = True
    for _ in range(50):
        d, a, c = np.sort(rng.uniform(-10, 10, 3))
        if not d < a < c:
            continue
        found = {
            flat(r.profile)
            for r in enumerate_equilibria_2p(
                film_game_symmetric(FilmMatrixParams.equal_bc(a=a, c=c, d=d))
            )
        }
        regime_ok &= found == {(1.0, 0.0, 1.0, 0.0), (0.0, 1.0, 0.0, 1.0)}
    criterion(
        "(G,G) condition a >= d matches on 500 b=c draws; d<a<c regime has "
        "exactly {(G,G), (P,P)}",
        disagreements == 0 and regime_ok,
        f"{disagreements} disagreements",
    )


def test_my_way_unique_equilibrium():
    reports = enumerate_equilibria_2p(my_way_game())
    criterion(
        "my-way game has exactly one equilibrium, both at 'my way'",
        len(reports) == 1 and flat(reports[0].profile) == (1.0, 0.0, 1.0, 0.0),
        f"{len(reports)} found",
    )


def test_equilibrium_existence_small_games():
    rng = np.random.default_rng(303)
    sizes = [(2, 2), (2, 3), (3, 3)]
    empty = 0
    for i in range(200):
        counts = sizes[i % len(sizes)]
        game = NormalFormGame(counts, rng.uniform(-10, 10, counts + (2,)))
        reports = enumerate_equilibria_2p(game)
        empty += not reports
        if reports:
            assert all(is_equilibrium(game, r.profile, tol=1e-7) for r in reports)
    criterion(
        "200 random games up to 3x3 all have at least one equilibrium",
        empty == 0,
        f"{empty} games came back empty",
    )


def test_scoring_maxima_and_zero_sum():
    form = default_form()
    all_a = tuple((10, 0, 0) for _ in range(10))
    top = score_uniform(form, PartnerResponse(1, all_a), PartnerResponse(2, all_a))
    uniform_ok = top.K == 200 and top.verdict is Verdict.BALANCED

    totals = (50, 5, 10, 25, 7)
    weighted_form = QuizForm(
        questions=tuple(
            Question(f"q{i}", ("a", "b", "c"), partner1_total=t, partner2_total=t)
            for i, t in enumerate(totals)
        )
    )
    full = lambda pid: PartnerResponse(
        pid, tuple((t, 0, 0) for t in totals)
    )
    weighted_top = score_weighted(weighted_form, full(1), full(2))
    weighted_ok = weighted_top.K == 2 * len(totals)

    rng = np.random.default_rng(404)
    exceptions = 0
    for i in range(1000):
        pick = form if i % 2 == 0 else weighted_form
        r1 = random_response(rng, pick, 1)
        r2 = random_response(rng, pick, 2)
        report = (
            score_uniform(pick, r1, r2) if pick is form else score_weighted(pick, r1, r2)
        )
        exceptions += report.P1 != -report.P2
    criterion(
        "uniform all-A gives K=200 exactly; weighted all-A gives K=2T exactly; "
        "P1 = -P2 on 1000 random pairs",
        uniform_ok and weighted_ok and exceptions == 0,
        f"K={top.K}, weighted K={weighted_top.K}, {exceptions} zero-sum exceptions",
    )


def test_weighted_reduces_to_uniform():
    form = default_form()
    rng = np.random.default_rng(505)
    worst = 0.0
    for _ in range(200):
        r1 = random_response(rng, form, 1)
        r2 = random_response(rng, form, 2)
        uniform = score_uniform(form, r1, r2)
        weighted = score_weighted(form, r1, r2)
        worst = max(
            worst,
            abs(weighted.P1 - uniform.P1 / 100),
            abs(weighted.K1 - uniform.K1 / 10),
        )
    criterion(
        "all-tens weighted scoring equals uniform/100 (P1) and uniform/10 (K1) "
        "within 1e-12 on 200 random pairs",
        worst <= 1e-12,
        f"worst gap {worst:.2e}",
    )


def test_stationary_score_oracle():
    rng = np.random.default_rng(2024)
    pairs = [
        (
            MemoryOneStrategy(tuple(rng.uniform(0.05, 0.95, 4))),
            MemoryOneStrategy(tuple(rng.uniform(0.05, 0.95, 4))),
        )
        for _ in range(1000)
    ]
    f_pat, f_gene = payoff_vectors(DEFAULT_IDD_PAYOFFS)
    exact = []
    worst_det = 0.0
    for p, q in pairs:
        result = stationary_scores(p, q, DEFAULT_IDD_PAYOFFS)
        exact.append((result.score_pat, result.score_gene))
        worst_det = max(
            worst_det,
            abs(determinant_score(p, q, f_pat) - result.score_pat),
            abs(determinant_score(p, q, f_gene) - result.score_gene),
        )

    lanes = 4
    avg_pat, avg_gene, _, _ = _simulate_tables(
        np.vstack([p.table() for p, _ in pairs[:lanes]]),
        np.vstack([q.table() for _, q in pairs[:lanes]]),
        1,
        DEFAULT_IDD_PAYOFFS,
        rounds=1_000_000,
        seed=77,
    )
    worst_sim = max(
        max(abs(avg_pat[i] - exact[i][0]), abs(avg_gene[i] - exact[i][1]))
        for i in range(lanes)
    )
    criterion(
        "determinant score matches the linear-solve stationary score within 1e-8 "
        "on 1000 interior pairs; a seeded 10^6-round simulation matches within 0.01",
        worst_det <= 1e-8 and worst_sim <= 0.01,
        f"det gap {worst_det:.1e}, sim gap {worst_sim:.4f}",
    )


def test_zd_equalizer_forces_score():
    payoffs = DEFAULT_IDD_PAYOFFS
    target = 2.0
    equalizer = zd_equalizer(payoffs, target)

    rng = np.random.default_rng(424242)
    mem1 = [MemoryOneStrategy(tuple(rng.uniform(0.05, 0.95, 4))) for _ in range(100)]
    mem3 = [TableStrategy(3, tuple(rng.uniform(0.05, 0.95, 64))) for _ in range(10)]
    worst_exact = max(
        abs(stationary_scores(equalizer, q, payoffs).score_gene - target)
        for q in mem1 + mem3
    )

    lanes = len(mem1) + len(mem3)
    rounds, blocks = 200_000, 50
    _, avg_gene, _, block_means = _simulate_tables(
        np.tile(_lift_table(equalizer, 3), (lanes, 1)),
        np.vstack([_lift_table(q, 3) for q in mem1 + mem3]),
        3,
        payoffs,
        rounds=rounds,
        seed=7,
        blocks=blocks,
    )
    stderr = block_means[:, :, 1].std(axis=1, ddof=1) / np.sqrt(blocks)
    z = np.abs(avg_gene - target) / stderr
    sim_ok = bool((z <= 3.0).all())

    infeasible_ok = True
    for bad_target in (4.0, 0.5):
        try:
            zd_equalizer(payoffs, bad_target)
            infeasible_ok = False
        except InfeasibleTargetError:
            pass
    criterion(
        "equalizer pins 100 memory-one and 10 memory-3 opponents at 2 "
        "(1e-6 stationary, 3 sigma simulated); targets 4 and 0.5 infeasible",
        worst_exact <= 1e-6 and sim_ok and infeasible_ok,
        f"stationary gap {worst_exact:.1e}, max z {z.max():.2f}",
    )


def test_no_self_control_evidence():
    start = time.monotonic()
    report = check_no_self_control(
        DEFAULT_IDD_PAYOFFS, trials=100, resolution=0.01, seed=5
    )
    elapsed = time.monotonic() - start
    spreads_large = report.min_spread is None or report.min_spread > report.spread_tol
    criterion(
        "the (alpha, gamma) grid at resolution 0.01 has no in-cube strategy "
        "pinning its own score across 100 opponents, in < 60 s",
        report.counterexample is None
        and report.candidates_in_cube == 0
        and spreads_large
        and elapsed < 60.0,
        f"{report.grid_points} grid points, {elapsed:.1f} s",
    )


def test_service_protocol():
    answers = {"1": [[7, 2, 1]] * 10, "2": [[2, 1, 7]] * 10}

    def contains(payload, needle):
        if payload == needle:
            return True
        if isinstance(payload, dict):
            return any(contains(v, needle) for v in payload.values())
        if isinstance(payload, list) and payload != needle:
            return any(contains(v, needle) for v in payload)
        return False

    chooser = random.Random(1234)
    sequences_ok = True
    for _ in range(30):
        with tempfile.TemporaryDirectory() as tmp:
            client = TestClient(create_app(SessionStore(tmp)))
            session = client.post("/sessions").json()
            sid = session["session_id"]
            tokens = dict(zip(("1", "2"), session["partner_tokens"]))
            submitted = set()
            for _ in range(chooser.randint(3, 12)):
                who = chooser.choice(("1", "2"))
                other = "2" if who == "1" else "1"
                kind = chooser.choice(("form", "submit", "report"))
                if kind == "form":
                    r = client.get(f"/sessions/{sid}/form", params={"token": tokens[who]})
                    sequences_ok &= r.status_code == 200
                elif kind == "submit":
                    r = client.post(
                        f"/sessions/{sid}/answers",
                        json={"token": tokens[who], "answers": answers[who]},
                    )
                    if who in submitted:
                        sequences_ok &= r.status_code == 409
                    else:
                        submitted.add(who)
                        expected = {1: STATE_ONE_SUBMITTED, 2: STATE_COMPLETE}
                        sequences_ok &= (
                            r.status_code == 200
                            and r.json()["state"] == expected[len(submitted)]
                        )
                else:
                    r = client.get(f"/sessions/{sid}/report", params={"token": tokens[who]})
                    sequences_ok &= r.status_code == (200 if len(submitted) == 2 else 202)
                sequences_ok &= not contains(json.loads(r.content), answers[other])

    with tempfile.TemporaryDirectory() as tmp:
        # byte-identical report through the CLI path and the service path
        form = default_form()
        hands = [[10, 0, 0]] * 10
        r1 = PartnerResponse(1, tuple(tuple(t) for t in hands))
        r2 = PartnerResponse(2, tuple(tuple(t) for t in hands))
        cli_bytes = (
            documents.dumps_canonical(
                documents.report_to_doc(score_uniform(form, r1, r2), form)
            )
            + "\n"
        ).encode()
        client = TestClient(create_app(SessionStore(tmp)))
        session = client.post("/sessions").json()
        sid, (t1, t2) = session["session_id"], session["partner_tokens"]
        client.post(f"/sessions/{sid}/answers", json={"token": t1, "answers": hands})
        client.post(f"/sessions/{sid}/answers", json={"token": t2, "answers": hands})
        body = client.get(f"/sessions/{sid}/report", params={"token": t1}).content
        bytes_ok = body == cli_bytes

    with tempfile.TemporaryDirectory() as tmp:
        # crash between the two submissions, restart, resume
        first = TestClient(create_app(SessionStore(tmp)))
        session = first.post("/sessions").json()
        sid, (t1, t2) = session["session_id"], session["partner_tokens"]
        first.post(f"/sessions/{sid}/answers", json={"token": t1, "answers": answers["1"]})
        revived = TestClient(create_app(SessionStore(tmp)))
        state = revived.get(f"/sessions/{sid}/form", params={"token": t2}).json()["state"]
        revived.post(f"/sessions/{sid}/answers", json={"token": t2, "answers": answers["2"]})
        report_code = revived.get(
            f"/sessions/{sid}/report", params={"token": t2}
        ).status_code
        crash_ok = state == STATE_ONE_SUBMITTED and report_code == 200

    criterion(
        "dual-blind invariant and created -> one_submitted -> complete hold over "
        "random endpoint sequences; service report is byte-identical to the CLI "
        "report; crash-restart resumes one_submitted",
        sequences_ok and bytes_ok and crash_ok,
        f"sequences={sequences_ok}, bytes={bytes_ok}, crash={crash_ok}",
    )
