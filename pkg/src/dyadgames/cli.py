"""Command line interface: solve, score, quiz run, idd, serve."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import documents
from .errors import (
    DegenerateChainError,
    DocumentError,
    InfeasibleTargetError,
    ValidationError,
)
from .games import enumerate_equilibria_2p
from .idd import (
    OUTCOMES,
    check_no_self_control,
    simulate_match,
    stationary_scores,
    verify_equalizer,
    zd_equalizer,
)
from .quiz import PartnerResponse, QuizForm, score_auto, score_weighted, validate_response
from .service import DEFAULT_TTL_DAYS, STORAGE_ENV_VAR, SessionStore


def _read_doc(path: str) -> dict:
    try:
        return documents.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc


def _emit(doc: dict, out: str | None) -> None:
    text = documents.dumps_canonical(doc) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_solve(args) -> int:
    game = documents.game_from_doc(_read_doc(args.game_file))
    reports = enumerate_equilibria_2p(game, tol=args.tolerance)
    print(f"{len(reports)} equilibrium(s) found (tolerance {args.tolerance:g})")
    for i, report in enumerate(reports, start=1):
        flags = report.kind + (", degenerate" if report.degenerate else "")
        print(f"equilibrium {i} ({flags}):")
        for player, (vector, support) in enumerate(
            zip(report.profile.strategies, report.support), start=1
        ):
            print(f"  player {player}: {np.round(vector, 9).tolist()}  support {list(support)}")
        print(f"  payoffs: {[round(v, 9) for v in report.payoffs]}")
        print(f"  max deviation gain: {report.max_deviation_gain:.3e}")
    if args.out:
        _emit(
            {
                "schema_version": documents.SCHEMA_VERSION,
                "kind": "equilibria",
                "tolerance": args.tolerance,
                "equilibria": [
                    {
                        "strategies": [v.tolist() for v in r.profile.strategies],
                        "support": [list(s) for s in r.support],
                        "payoffs": list(r.payoffs),
                        "max_deviation_gain": r.max_deviation_gain,
                        "kind": r.kind,
                        "degenerate": r.degenerate,
                    }
                    for r in reports
                ],
            },
            args.out,
        )
    return 0


def _load_scoring_inputs(args):
    form = documents.form_from_doc(_read_doc(args.form_file))
    r1 = documents.response_from_doc(_read_doc(args.response1))
    r2 = documents.response_from_doc(_read_doc(args.response2))
    return form, r1, r2


def _print_summary(report) -> None:
    names = {
        "partner1_dominant": "partner 1 dominates",
        "partner2_dominant": "partner 2 dominates",
        "balanced": "the relationship is balanced",
    }
    print(f"verdict: {names[report.verdict.value]} (P1={report.P1:g}, P2={report.P2:g})")
    print(f"satisfaction: K={report.K:g} of a possible {report.K_max:g}")
    x, y = report.balance_point
    print(f"balance point: ({x:.4g}, {y:.4g}) in the {report.region.value} region")


def _cmd_score(args) -> int:
    form, r1, r2 = _load_scoring_inputs(args)
    report = score_weighted(form, r1, r2) if args.weighted else score_auto(form, r1, r2)
    _emit(documents.report_to_doc(report, form), args.out)
    _print_summary(report)
    return 0


def _ansi_clear() -> None:
    sys.stdout.write("\x1b[2J\x1b[H")
    sys.stdout.flush()


def run_quiz(form: QuizForm, input_fn=input, print_fn=print, clear_fn=_ansi_clear):
    """Interactive dual-blind session at the terminal.

    Partner 1 answers every question, the screen is wiped and the terminal
    handed over, partner 2 answers, and only then is the joint report
    shown.  Nothing either partner typed is echoed afterward and nothing
    is persisted mid-session.
    """
    responses = {}
    for partner in (1, 2):
        print_fn(f"=== Partner {partner}: answer privately, do not show your partner ===")
        answers = []
        for number, question in enumerate(form.questions, start=1):
            total = question.total_for(partner)
            print_fn(f"\nQuestion {number}: {question.prompt}")
            for label, outcome in zip("ABC", question.outcomes):
                print_fn(f"  {label}: {outcome}")
            while True:
                raw = input_fn(f"points for A B C (must add up to {total}): ")
                parts = raw.replace(",", " ").split()
                try:
                    triple = tuple(int(p) for p in parts)
                except ValueError:
                    triple = None
                if triple is None or len(triple) != 3:
                    print_fn("enter three whole numbers, like 2 3 5")
                    continue
                if any(v < 0 for v in triple):
                    print_fn("numbers must not be negative")
                    continue
                if sum(triple) != total:
                    print_fn(f"numbers must add up to {total} (got {sum(triple)})")
                    continue
                answers.append(triple)
                break
        responses[partner] = PartnerResponse(partner_id=partner, answers=tuple(answers))
        clear_fn()
        if partner == 1:
            print_fn("=== Hand the terminal to partner 2 ===")
            input_fn("press enter when partner 2 is ready: ")
            clear_fn()
    report = score_auto(form, responses[1], responses[2])
    print_fn("=== Joint report ===")
    _print_summary(report)
    return report


def _cmd_quiz_run(args) -> int:
    form = documents.form_from_doc(_read_doc(args.form_file))
    run_quiz(form)
    return 0


def _cmd_idd(args) -> int:
    config = documents.idd_config_from_doc(_read_doc(args.config_file))
    payoffs = config["payoffs"]
    if args.idd_command == "scores":
        for name in ("pat", "gene"):
            if name not in config:
                raise DocumentError(f"scores needs a '{name}' strategy in the config")
        result = stationary_scores(
            config["pat"], config["gene"], payoffs, first_outcome=config["first_outcome"]
        )
        doc = {
            "schema_version": documents.SCHEMA_VERSION,
            "kind": "idd_scores",
            "score_pat": result.score_pat,
            "score_gene": result.score_gene,
            "distribution": result.distribution.tolist(),
            "ergodic": result.ergodic,
            "method": result.method,
        }
        _emit(doc, args.out)
        print(f"scores: pat={result.score_pat:g} gene={result.score_gene:g}")
        print(f"outcome distribution over {OUTCOMES}: {np.round(result.distribution, 6).tolist()}")
        if not result.ergodic:
            print("chain not ergodic; long-run averages from the first-round outcome")
        return 0
    if args.idd_command == "zd":
        if "target" not in config:
            raise DocumentError("zd needs a 'target' in the config")
        target = float(config["target"])
        seed = int(config.get("seed", 0))
        try:
            strategy = zd_equalizer(payoffs, target)
        except InfeasibleTargetError as exc:
            doc = {
                "schema_version": documents.SCHEMA_VERSION,
                "kind": "zd_equalizer",
                "target": target,
                "feasible": False,
                "reason": str(exc),
                "forceable_range": [exc.lower, exc.upper],
            }
            _emit(doc, args.out)
            print(f"infeasible: {exc}")
            return 0
        verification = verify_equalizer(payoffs, strategy, target, seed=seed)
        doc = {
            "schema_version": documents.SCHEMA_VERSION,
            "kind": "zd_equalizer",
            "target": target,
            "feasible": True,
            "strategy": documents.strategy_to_doc(strategy),
            "verification": verification,
        }
        _emit(doc, args.out)
        print(f"equalizer for target {target:g}: {list(strategy.probs)}")
        print(
            f"verified against {verification['opponents']} random opponents: "
            f"max |score - target| = {verification['max_abs_error']:.2e}"
        )
        return 0
    # simulate
    for name in ("pat", "gene"):
        if name not in config:
            raise DocumentError(f"simulate needs a '{name}' strategy in the config")
    rounds = args.rounds if args.rounds is not None else config.get("rounds", 10_000)
    seed = args.seed if args.seed is not None else config.get("seed", 0)
    result = simulate_match(
        config["pat"],
        config["gene"],
        payoffs,
        rounds=rounds,
        seed=seed,
        first_outcome=config["first_outcome"],
    )
    doc = {
        "schema_version": documents.SCHEMA_VERSION,
        "kind": "idd_simulation",
        "rounds": result.rounds,
        "seed": result.seed,
        "avg_pat": result.avg_pat,
        "avg_gene": result.avg_gene,
        "outcome_counts": list(result.outcome_counts),
        "coop_rate_pat": result.coop_rate_pat,
        "coop_rate_gene": result.coop_rate_gene,
        "first_outcome": result.first_outcome,
    }
    _emit(doc, args.out)
    print(
        f"simulated {result.rounds} rounds (seed {result.seed}): "
        f"pat={result.avg_pat:g} gene={result.avg_gene:g}"
    )
    return 0


def _cmd_selfcheck(args) -> int:
    config = documents.idd_config_from_doc(_read_doc(args.config_file))
    report = check_no_self_control(
        config["payoffs"], trials=args.trials, seed=int(config.get("seed", 0))
    )
    found = report.counterexample is not None
    print(f"grid points scanned: {report.grid_points}")
    print(f"self-targeting candidates inside [0,1]^4: {report.candidates_in_cube}")
    if report.min_spread is not None:
        print(f"smallest own-score spread seen: {report.min_spread:.4g}")
    print("counterexample found" if found else "no strategy pins its own score")
    return 0


def _cmd_serve(args) -> int:
    host, port, ttl = "127.0.0.1", 8000, DEFAULT_TTL_DAYS
    storage = os.environ.get(STORAGE_ENV_VAR)
    if args.config:
        doc = _read_doc(args.config)
        version = doc.get("schema_version")
        if version != documents.SCHEMA_VERSION:
            raise DocumentError(f"unsupported schema_version {version}")
        host = doc.get("host", host)
        port = int(doc.get("port", port))
        ttl = float(doc.get("ttl_days", ttl))
        storage = storage or doc.get("storage_dir")
    if args.host:
        host = args.host
    if args.port:
        port = args.port
    if args.storage:
        storage = args.storage
    if not storage:
        raise DocumentError(
            f"no storage directory: set {STORAGE_ENV_VAR}, --storage, or storage_dir "
            "in the config file"
        )
    from .service import serve

    print(f"serving quiz sessions on {host}:{port}, storage in {storage}")
    serve(host, port, SessionStore(storage, ttl_days=ttl))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyadgames",
        description="Tiny-game equilibria, the compatibility test, and give-and-take dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="enumerate equilibria of a game file")
    solve.add_argument("game_file")
    solve.add_argument("--tolerance", type=float, default=1e-7)
    solve.add_argument("--out", help="also write the equilibria as JSON")
    solve.set_defaults(func=_cmd_solve)

    score = sub.add_parser("score", help="score two response files against a form")
    score.add_argument("form_file")
    score.add_argument("response1")
    score.add_argument("response2")
    score.add_argument("--weighted", action="store_true", help="force weight-normalized scoring")
    score.add_argument("--out", help="write the report JSON here instead of stdout")
    score.set_defaults(func=_cmd_score)

    quiz = sub.add_parser("quiz", help="interactive quiz commands")
    quiz_sub = quiz.add_subparsers(dest="quiz_command", required=True)
    quiz_run = quiz_sub.add_parser("run", help="run a dual-blind session in the terminal")
    quiz_run.add_argument("form_file")
    quiz_run.set_defaults(func=_cmd_quiz_run)

    idd = sub.add_parser("idd", help="iterated dating dilemma tools")
    idd_sub = idd.add_subparsers(dest="idd_command", required=True)
    for name, help_text in (
        ("scores", "exact long-run scores for a strategy pair"),
        ("zd", "construct and verify an opponent-score equalizer"),
        ("simulate", "seeded match simulation"),
    ):
        p = idd_sub.add_parser(name, help=help_text)
        p.add_argument("config_file")
        p.add_argument("--out", help="write the result JSON here instead of stdout")
        if name == "simulate":
            p.add_argument("--rounds", type=int)
            p.add_argument("--seed", type=int)
        p.set_defaults(func=_cmd_idd)

    selfcheck = idd_sub.add_parser(
        "selfcheck", help="evidence that nobody can pin their own score"
    )
    selfcheck.add_argument("config_file")
    selfcheck.add_argument("--trials", type=int, default=100)
    selfcheck.set_defaults(func=_cmd_selfcheck)

    serve = sub.add_parser("serve", help="run the dual-blind quiz session service")
    serve.add_argument("--config", help="JSON config with host, port, ttl_days, storage_dir")
    serve.add_argument("--host")
    serve.add_argument("--port", type=int)
    serve.add_argument("--storage", help=f"storage directory (or set {STORAGE_ENV_VAR})")
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        for issue in getattr(exc, "issues", []):
            print(f"  {issue}", file=sys.stderr)
        return 1
    except (DegenerateChainError, InfeasibleTargetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        print("\ninterrupted; nothing was saved", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
