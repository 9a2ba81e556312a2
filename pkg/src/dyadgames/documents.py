"""JSON document schemas for games, quiz forms, responses, reports,
strategies, and simulation configs.

Everything on disk and on the wire is JSON with a ``schema_version`` field
(currently 1) and a ``kind`` tag.  ``dumps_canonical`` fixes key order and
separators so that identical values always serialize to identical bytes;
report documents in particular must be byte-stable across the CLI and the
session service.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import DocumentError
from .games import NormalFormGame
from .idd import MemoryOneStrategy, TableStrategy
from .quiz import PartnerResponse, Question, QuizForm, Region, ScoreReport, Verdict
from .scenarios import IDDPayoffs

SCHEMA_VERSION = 1


def dumps_canonical(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), allow_nan=False)


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document root must be an object")
    return doc


def _require(doc: dict, field: str, kinds=None):
    if field not in doc:
        raise DocumentError(f"missing field '{field}'")
    value = doc[field]
    if kinds is not None and not isinstance(value, kinds):
        raise DocumentError(f"field '{field}' has wrong type: {type(value).__name__}")
    return value


def _check_envelope(doc: dict, kind: str) -> None:
    version = _require(doc, "schema_version", int)
    if version != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {version}")
    got = _require(doc, "kind", str)
    if got != kind:
        raise DocumentError(f"expected kind '{kind}', got '{got}'")


# -- games -------------------------------------------------------------

def game_to_doc(game: NormalFormGame) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "game",
        "players": game.player_count,
        "strategy_counts": list(game.strategy_counts),
        "payoffs": [
            {"profile": list(profile), "values": values}
            for profile, values in sorted(game.payoff_map().items())
        ],
    }


def game_from_doc(doc: dict) -> NormalFormGame:
    _check_envelope(doc, "game")
    players = _require(doc, "players", int)
    counts = _require(doc, "strategy_counts", list)
    if players != len(counts):
        raise DocumentError(
            f"players is {players} but strategy_counts has {len(counts)} entries"
        )
    entries = _require(doc, "payoffs", list)
    payoff_map: dict[tuple, list] = {}
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise DocumentError(f"payoffs[{i}] must be an object")
        profile = entry.get("profile")
        values = entry.get("values")
        if not isinstance(profile, list):
            raise DocumentError(f"payoffs[{i}].profile must be a list of indices")
        if not isinstance(values, list):
            raise DocumentError(f"payoffs[{i}].values must be a list of payoffs")
        key = tuple(profile)
        if key in payoff_map:
            raise DocumentError(f"payoffs[{i}].profile {profile} appears twice")
        payoff_map[key] = values
    try:
        return NormalFormGame(counts, payoff_map)
    except ValueError as exc:
        raise DocumentError(f"payoffs: {exc}") from exc


# -- quiz forms and responses ------------------------------------------

def form_to_doc(form: QuizForm) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "quiz_form",
        "questions": [
            {
                "prompt": q.prompt,
                "outcomes": list(q.outcomes),
                "partner1_total": q.partner1_total,
                "partner2_total": q.partner2_total,
            }
            for q in form.questions
        ],
    }


def form_from_doc(doc: dict) -> QuizForm:
    _check_envelope(doc, "quiz_form")
    raw = _require(doc, "questions", list)
    questions = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise DocumentError(f"questions[{i}] must be an object")
        prompt = entry.get("prompt")
        outcomes = entry.get("outcomes")
        if not isinstance(prompt, str):
            raise DocumentError(f"questions[{i}].prompt must be a string")
        if not isinstance(outcomes, list) or len(outcomes) != 3:
            raise DocumentError(f"questions[{i}].outcomes must list 3 labels")
        try:
            questions.append(
                Question(
                    prompt=prompt,
                    outcomes=tuple(outcomes),
                    partner1_total=entry.get("partner1_total", 10),
                    partner2_total=entry.get("partner2_total", 10),
                )
            )
        except ValueError as exc:
            raise DocumentError(f"questions[{i}]: {exc}") from exc
    try:
        return QuizForm(questions=tuple(questions))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def response_to_doc(response: PartnerResponse) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "quiz_response",
        "partner_id": response.partner_id,
        "answers": [list(triple) for triple in response.answers],
    }


def response_from_doc(doc: dict) -> PartnerResponse:
    _check_envelope(doc, "quiz_response")
    partner_id = _require(doc, "partner_id", int)
    answers = _require(doc, "answers", list)
    triples = []
    for i, triple in enumerate(answers):
        if not isinstance(triple, list) or len(triple) != 3:
            raise DocumentError(f"answers[{i}] must be a list of 3 integers")
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in triple):
            raise DocumentError(f"answers[{i}] must contain integers")
        triples.append(tuple(triple))
    try:
        return PartnerResponse(partner_id=partner_id, answers=tuple(triples))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def report_to_doc(report: ScoreReport, form: QuizForm) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "score_report",
        "mode": report.mode,
        "X": report.X,
        "Y": report.Y,
        "P1": report.P1,
        "P2": report.P2,
        "K1": report.K1,
        "K2": report.K2,
        "K": report.K,
        "K_max": report.K_max,
        "balance_point": list(report.balance_point),
        "verdict": report.verdict.value,
        "region": report.region.value,
        "questions": [q.prompt for q in form.questions],
    }


def report_from_doc(doc: dict) -> ScoreReport:
    _check_envelope(doc, "score_report")
    mode = _require(doc, "mode", str)
    if mode not in ("uniform", "weighted"):
        raise DocumentError(f"unknown mode '{mode}'")
    point = _require(doc, "balance_point", list)
    if len(point) != 2:
        raise DocumentError("balance_point must be [x, y]")
    try:
        verdict = Verdict(_require(doc, "verdict", str))
        region = Region(_require(doc, "region", str))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    numbers = {
        name: _require(doc, name, (int, float))
        for name in ("X", "Y", "P1", "P2", "K1", "K2", "K", "K_max")
    }
    return ScoreReport(
        mode=mode,
        balance_point=(point[0], point[1]),
        verdict=verdict,
        region=region,
        **numbers,
    )


# -- strategies and simulation configs ---------------------------------

def strategy_to_doc(strategy) -> dict:
    if isinstance(strategy, MemoryOneStrategy):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "memory-one",
            "probs": list(strategy.probs),
        }
    if isinstance(strategy, TableStrategy):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "table",
            "memory": strategy.memory,
            "entries": list(strategy.entries),
        }
    raise DocumentError(f"cannot serialize strategy of type {type(strategy).__name__}")


def strategy_from_doc(doc: dict):
    version = _require(doc, "schema_version", int)
    if version != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {version}")
    kind = _require(doc, "kind", str)
    try:
        if kind == "memory-one":
            probs = _require(doc, "probs", list)
            return MemoryOneStrategy(tuple(float(v) for v in probs))
        if kind == "table":
            memory = _require(doc, "memory", int)
            entries = _require(doc, "entries", list)
            return TableStrategy(memory=memory, entries=tuple(float(v) for v in entries))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    raise DocumentError(f"unknown strategy kind '{kind}'")


def payoffs_to_doc(payoffs: IDDPayoffs) -> dict:
    return {"W": payoffs.W, "X": payoffs.X, "Y": payoffs.Y, "Z": payoffs.Z}


def payoffs_from_doc(doc: dict) -> IDDPayoffs:
    if not isinstance(doc, dict):
        raise DocumentError("payoffs must be an object with W, X, Y, Z")
    values = {}
    for name in ("W", "X", "Y", "Z"):
        if name not in doc:
            raise DocumentError(f"payoffs missing '{name}'")
        if not isinstance(doc[name], (int, float)):
            raise DocumentError(f"payoffs.{name} must be a number")
        values[name] = float(doc[name])
    try:
        return IDDPayoffs(**values)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def idd_config_to_doc(
    payoffs: IDDPayoffs,
    pat=None,
    gene=None,
    rounds: int | None = None,
    seed: int | None = None,
    target: float | None = None,
    first_outcome: str = "CC",
) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "idd_config",
        "payoffs": payoffs_to_doc(payoffs),
        "first_outcome": first_outcome,
    }
    if pat is not None:
        doc["pat"] = strategy_to_doc(pat)
    if gene is not None:
        doc["gene"] = strategy_to_doc(gene)
    if rounds is not None:
        doc["rounds"] = rounds
    if seed is not None:
        doc["seed"] = seed
    if target is not None:
        doc["target"] = target
    return doc


def idd_config_from_doc(doc: dict) -> dict:
    """Parsed simulation config: payoffs plus whatever optional pieces the
    subcommand needs (strategies, rounds, seed, target)."""
    _check_envelope(doc, "idd_config")
    config = {
        "payoffs": payoffs_from_doc(_require(doc, "payoffs", dict)),
        "first_outcome": doc.get("first_outcome", "CC"),
    }
    for name in ("pat", "gene"):
        if name in doc:
            if not isinstance(doc[name], dict):
                raise DocumentError(f"field '{name}' must be a strategy object")
            config[name] = strategy_from_doc(doc[name])
    for name, kinds in (("rounds", int), ("seed", int), ("target", (int, float))):
        if name in doc:
            if not isinstance(doc[name], kinds) or isinstance(doc[name], bool):
                raise DocumentError(f"field '{name}' has wrong type")
            config[name] = doc[name]
    return config
