"""The compatibility test: forms, answer validation, and scoring.

Each question offers three outcomes.  Outcome A means things go fully the
answering partner's way, B is a compromise, C means the partner yields.
A partner splits a per-question point budget (10 by default) across the
three slots; how the budget lands measures how often life goes their way.

Two scores come out of a pair of responses.  The dominance differential
P1 = -P2 compares the partners' cumulative my-way points (weight-normalized
in the weighted variant).  The satisfaction index K sums, per partner, the
A-slot minus the C-slot (divided by the question weight when weighted); it
is largest when both partners put everything on A, and that maximum is
20*T for the uniform test (200 for the standard ten questions) and 2*T for
the weighted one.  B slots are validated as part of the budget but do not
enter either score.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ValidationError


class Verdict(str, Enum):
    PARTNER1_DOMINANT = "partner1_dominant"
    PARTNER2_DOMINANT = "partner2_dominant"
    BALANCED = "balanced"


class Region(str, Enum):
    CYAN = "cyan"  # x > y: partner 1 gets their way more
    MAGENTA = "magenta"  # y > x: partner 2 gets their way more
    DIAGONAL = "diagonal"  # x = y: balanced


@dataclass(frozen=True)
class Question:
    prompt: str
    outcomes: tuple[str, str, str]  # A (my way), B (compromise), C (the highway)
    partner1_total: int = 10
    partner2_total: int = 10

    def __post_init__(self):
        if len(self.outcomes) != 3:
            raise ValidationError("a question needs exactly three outcome labels")
        for total in (self.partner1_total, self.partner2_total):
            if not isinstance(total, int) or total < 1:
                raise ValidationError(f"question totals must be positive integers, got {total}")

    def total_for(self, partner_id: int) -> int:
        return self.partner1_total if partner_id == 1 else self.partner2_total


@dataclass(frozen=True)
class QuizForm:
    questions: tuple[Question, ...]

    def __post_init__(self):
        if len(self.questions) < 1:
            raise ValidationError("a form needs at least one question")

    @property
    def question_count(self) -> int:
        return len(self.questions)

    def is_uniform(self) -> bool:
        """True when every total is the standard 10 points."""
        return all(
            q.partner1_total == 10 and q.partner2_total == 10 for q in self.questions
        )


@dataclass(frozen=True)
class PartnerResponse:
    partner_id: int  # 1 or 2
    answers: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.partner_id not in (1, 2):
            raise ValidationError(f"partner_id must be 1 or 2, got {self.partner_id}")


@dataclass(frozen=True)
class Violation:
    question: int | None  # 1-based question number, None for structural issues
    message: str

    def __str__(self):
        where = f"question {self.question}: " if self.question else ""
        return where + self.message


@dataclass(frozen=True)
class ScoreReport:
    """All computed numbers for one pair of responses.

    X and Y are the partners' cumulative my-way points: raw integer sums
    for the uniform test, weight-normalized fractions X/W1 and Y/W2 for
    the weighted one.  P1/P2 is the dominance differential (always exactly
    opposite), K1/K2/K the satisfaction numbers, and balance_point the
    (x, y) my-way probabilities in the unit square.
    """

    mode: str  # "uniform" | "weighted"
    X: float
    Y: float
    P1: float
    P2: float
    K1: float
    K2: float
    K: float
    K_max: float
    balance_point: tuple[float, float]
    verdict: Verdict
    region: Region


_DEFAULT_QUESTIONS = (
    (
        "You have decided to spend the weekend together. How does it go?",
        (
            "It's a blast!",
            "It's not my first choice, but it's nice.",
            "Well, at least my partner is happy.",
        ),
    ),
    (
        "How do you feel about your sex life?",
        (
            "Sex is just the way I like it!",
            "I'm satisfied.",
            "I am sexually frustrated.",
        ),
    ),
    (
        "How do you and your partner manage your careers and chores?",
        (
            "Career and chores are just the way I like them.",
            "I've had to make some compromises.",
            "I've made significant sacrifices for my partner.",
        ),
    ),
    (
        "Your partner has fallen ill. What happens?",
        (
            "I rarely catch whatever s/he has.",
            "I take care of him/her and might get sick.",
            "I stay by his/her side and get sick.",
        ),
    ),
    (
        "How often do you see your family and your in-laws?",
        (
            "Exactly as much as I would like.",
            "It's a compromise but we manage to get along.",
            "I don't see my own family enough.",
        ),
    ),
    (
        "If you are in a long relationship, your circle of friends often change. "
        "Whose friends do you tend to see?",
        (
            "I spend as much time with my friends as I want.",
            "I spend less time with my friends but still keep up.",
            "I rarely see my old friends.",
        ),
    ),
    (
        "How is your financial situation?",
        (
            "Great.",
            "I can't always spend the way I'd like, but it's fine.",
            "We have financial problems.",
        ),
    ),
    (
        "Have you and your partner talked about having children?",
        (
            "Yes and I'm happy with our decisions.",
            "We will discuss it eventually.",
            "That is up to my partner to decide.",
        ),
    ),
    (
        "How do you feel about your lifestyle in terms of health, fitness, and "
        "physical appearance?",
        (
            "I am totally happy.",
            "Fine.",
            "It is not what it used to be.",
        ),
    ),
    (
        "You have agreed to spend a cozy night at home watching TV. How does it go?",
        (
            "I love what we watch.",
            "We compromise on something.",
            "My partner chooses what we watch.",
        ),
    ),
)


def default_form() -> QuizForm:
    """The standard ten-question relationship test, 10 points per question."""
    return QuizForm(
        questions=tuple(Question(prompt=p, outcomes=o) for p, o in _DEFAULT_QUESTIONS)
    )


def validate_response(form: QuizForm, response: PartnerResponse) -> list[Violation]:
    """Every broken budget or range, with its question number.

    An empty list means the response is valid.  Slots must be nonnegative
    integers and each triple must add up to that partner's total for the
    question.
    """
    violations: list[Violation] = []
    if len(response.answers) != form.question_count:
        violations.append(
            Violation(
                None,
                f"expected {form.question_count} answers, got {len(response.answers)}",
            )
        )
        return violations
    for idx, (question, triple) in enumerate(zip(form.questions, response.answers), start=1):
        if len(triple) != 3:
            violations.append(Violation(idx, f"expected 3 slots, got {len(triple)}"))
            continue
        if any(not isinstance(v, int) or isinstance(v, bool) for v in triple):
            violations.append(Violation(idx, f"slots must be integers, got {triple}"))
            continue
        if any(v < 0 for v in triple):
            violations.append(Violation(idx, f"slots must be nonnegative, got {triple}"))
            continue
        total = question.total_for(response.partner_id)
        if sum(triple) != total:
            violations.append(
                Violation(idx, f"slots must add up to {total}, got {sum(triple)}")
            )
    return violations


def _require_valid(form: QuizForm, response: PartnerResponse, expected_partner: int) -> None:
    if response.partner_id != expected_partner:
        raise ValidationError(
            f"expected a response from partner {expected_partner}, "
            f"got partner {response.partner_id}"
        )
    violations = validate_response(form, response)
    if violations:
        raise ValidationError(
            f"invalid response from partner {response.partner_id}",
            issues=[str(v) for v in violations],
        )


def _verdict_and_region(p1: float, x: float, y: float) -> tuple[Verdict, Region]:
    if p1 > -p1:
        verdict = Verdict.PARTNER1_DOMINANT
    elif -p1 > p1:
        verdict = Verdict.PARTNER2_DOMINANT
    else:
        verdict = Verdict.BALANCED
    if x > y:
        region = Region.CYAN
    elif y > x:
        region = Region.MAGENTA
    else:
        region = Region.DIAGONAL
    return verdict, region


def classify(report: ScoreReport) -> tuple[Verdict, Region]:
    """Dominance verdict and balance-square region for a computed report."""
    x, y = report.balance_point
    return _verdict_and_region(report.P1, x, y)


def score_uniform(form: QuizForm, r1: PartnerResponse, r2: PartnerResponse) -> ScoreReport:
    """Score a standard all-tens form with plain integer sums.

    X and Y are the partners' summed A slots, K1 and K2 the summed A minus
    C slots.  The balance point divides by the total budget 10*T, mapping
    the scores into my-way probabilities.
    """
    if not form.is_uniform():
        raise ValidationError(
            "uniform scoring needs every question total to be 10; use score_weighted"
        )
    _require_valid(form, r1, 1)
    _require_valid(form, r2, 2)
    T = form.question_count
    X = sum(a for a, _, _ in r1.answers)
    Y = sum(alpha for alpha, _, _ in r2.answers)
    K1 = sum(a - c for a, _, c in r1.answers)
    K2 = sum(alpha - gamma for alpha, _, gamma in r2.answers)
    P1 = X - Y
    x, y = X / (10 * T), Y / (10 * T)
    verdict, region = _verdict_and_region(P1, x, y)
    return ScoreReport(
        mode="uniform",
        X=X,
        Y=Y,
        P1=P1,
        P2=-P1,
        K1=K1,
        K2=K2,
        K=K1 + K2,
        K_max=20 * T,
        balance_point=(x, y),
        verdict=verdict,
        region=region,
    )


def score_weighted(form: QuizForm, r1: PartnerResponse, r2: PartnerResponse) -> ScoreReport:
    """Score a form whose questions carry partner-chosen point totals.

    Sums are normalized by the chosen weights: X/W1 and Y/W2 are the
    my-way probabilities (W1, W2 the summed totals), and each question's
    A minus C contribution is divided by its total, so every question
    moves the satisfaction index by at most 1 regardless of its budget.
    """
    _require_valid(form, r1, 1)
    _require_valid(form, r2, 2)
    T = form.question_count
    W1 = sum(q.partner1_total for q in form.questions)
    W2 = sum(q.partner2_total for q in form.questions)
    X_raw = sum(a for a, _, _ in r1.answers)
    Y_raw = sum(alpha for alpha, _, _ in r2.answers)
    K1 = sum((a - c) / q.partner1_total for q, (a, _, c) in zip(form.questions, r1.answers))
    K2 = sum(
        (alpha - gamma) / q.partner2_total
        for q, (alpha, _, gamma) in zip(form.questions, r2.answers)
    )
    x, y = X_raw / W1, Y_raw / W2
    P1 = x - y
    verdict, region = _verdict_and_region(P1, x, y)
    return ScoreReport(
        mode="weighted",
        X=x,
        Y=y,
        P1=P1,
        P2=-P1,
        K1=K1,
        K2=K2,
        K=K1 + K2,
        K_max=2 * T,
        balance_point=(x, y),
        verdict=verdict,
        region=region,
    )


def score_auto(form: QuizForm, r1: PartnerResponse, r2: PartnerResponse) -> ScoreReport:
    """Uniform scoring for all-tens forms, weighted otherwise."""
    if form.is_uniform():
        return score_uniform(form, r1, r2)
    return score_weighted(form, r1, r2)
