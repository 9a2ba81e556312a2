"""Game-theoretic toolkit for two-person relationships.

Three capabilities, one package:

- tiny normal-form games with equilibrium checks and full two-player
  enumeration (``games``, ``scenarios``);
- the dual-blind compatibility test with uniform and weighted scoring
  (``quiz``), served over HTTP (``service``) and at the terminal;
- the iterated dating dilemma: exact long-run scores for memory-one and
  table strategies, zero-determinant equalizers, and seeded simulation
  (``idd``).
"""

from .errors import (
    DegenerateChainError,
    DocumentError,
    InfeasibleTargetError,
    ValidationError,
)
from .games import (
    EquilibriumReport,
    MixedProfile,
    NormalFormGame,
    deviation_gain,
    enumerate_equilibria_2p,
    expected_payoff,
    is_equilibrium,
    pair_profile,
)
from .idd import (
    ALWAYS_GIVE,
    ALWAYS_TAKE,
    TIT_FOR_TAT,
    WIN_STAY_LOSE_SHIFT,
    JointChain,
    MatchResult,
    MemoryOneStrategy,
    SelfControlReport,
    StationaryResult,
    TableStrategy,
    ZDSpec,
    check_no_self_control,
    determinant_score,
    joint_chain,
    payoff_vectors,
    simulate_match,
    stationary_scores,
    verify_equalizer,
    zd_equalizer,
    zd_strategy,
)
from .quiz import (
    PartnerResponse,
    Question,
    QuizForm,
    Region,
    ScoreReport,
    Verdict,
    Violation,
    classify,
    default_form,
    score_auto,
    score_uniform,
    score_weighted,
    validate_response,
)
from .scenarios import (
    DEFAULT_IDD_PAYOFFS,
    FilmMatrixParams,
    IDDPayoffs,
    film_game_symmetric,
    film_game_v1,
    gg_equilibrium_condition,
    idd_payoffs,
    my_way_game,
    pp_equilibrium_condition,
)

__version__ = "0.1.0"
