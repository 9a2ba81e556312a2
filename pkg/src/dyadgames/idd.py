"""Iterated give-and-take dynamics between two partners, Pat and Gene.

Each round both choose to give (cooperate, C) or take (defect, D).  Joint
outcomes are labeled from Pat's side, in the fixed order CC, CD, DC, DD,
so CD means Pat gave while Gene took.  A memory-one strategy is four
cooperation probabilities, one per previous outcome, read from the owner's
own perspective; Gene therefore consults the mirrored outcome (CD and DC
swapped).  The pair of strategies induces a Markov chain on the four
outcomes, and long-run scores are stationary averages of the payoff
vectors f_Pat = (W, Z, Y, X) and f_Gene = (W, Y, Z, X).

Longer memories are supported as lookup tables over the last k outcomes.
They add nothing strategically: the chain lifted to k-histories yields the
same forced-score identities, which is exactly what the zero-determinant
construction exploits.  A zero-determinant strategy makes the stationary
average of alpha * f_Pat + beta * f_Gene + gamma vanish; the equalizer
subfamily (alpha = 0) pins the opponent's score at -gamma/beta no matter
what the opponent plays.  No such pinning of one's own score is possible,
and ``check_no_self_control`` gathers the grid evidence for that.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateChainError, InfeasibleTargetError, ValidationError
from .scenarios import IDDPayoffs

OUTCOMES = ("CC", "CD", "DC", "DD")
OUTCOME_INDEX = {label: i for i, label in enumerate(OUTCOMES)}
# Gene perceives the mirrored outcome: CD and DC swap.
MIRROR = (0, 2, 1, 3)

MAX_TABLE_MEMORY = 8
MAX_EXACT_MEMORY = 5  # beyond this the lifted chain is too large to solve densely


@dataclass(frozen=True)
class MemoryOneStrategy:
    """Cooperation probabilities after each previous outcome (CC, CD, DC, DD),
    always from the owner's own perspective."""

    probs: tuple[float, float, float, float]

    def __post_init__(self):
        if len(self.probs) != 4:
            raise ValidationError("a memory-one strategy needs 4 probabilities")
        for i, p in enumerate(self.probs):
            if not 0.0 <= p <= 1.0:
                raise ValidationError(f"probability {i + 1} out of [0,1]: {p}")
        object.__setattr__(self, "probs", tuple(float(p) for p in self.probs))

    @property
    def memory(self) -> int:
        return 1

    def table(self) -> np.ndarray:
        return np.asarray(self.probs, dtype=float)


@dataclass(frozen=True)
class TableStrategy:
    """Cooperation probability looked up from the last ``memory`` outcomes.

    Histories are encoded in base 4 with the most recent outcome in the
    least significant digit, so entry 0 is the all-CC history.
    """

    memory: int
    entries: tuple[float, ...]

    def __post_init__(self):
        if not 1 <= self.memory <= MAX_TABLE_MEMORY:
            raise ValidationError(f"memory must be in 1..{MAX_TABLE_MEMORY}")
        if len(self.entries) != 4**self.memory:
            raise ValidationError(
                f"memory {self.memory} needs {4 ** self.memory} entries, "
                f"got {len(self.entries)}"
            )
        for i, p in enumerate(self.entries):
            if not 0.0 <= p <= 1.0:
                raise ValidationError(f"entry {i} out of [0,1]: {p}")
        object.__setattr__(self, "entries", tuple(float(p) for p in self.entries))

    def table(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=float)


ALWAYS_GIVE = MemoryOneStrategy((1.0, 1.0, 1.0, 1.0))
ALWAYS_TAKE = MemoryOneStrategy((0.0, 0.0, 0.0, 0.0))
WIN_STAY_LOSE_SHIFT = MemoryOneStrategy((1.0, 0.0, 0.0, 1.0))
TIT_FOR_TAT = MemoryOneStrategy((1.0, 0.0, 1.0, 0.0))


@dataclass(frozen=True)
class JointChain:
    """Row-stochastic transition matrix over the four joint outcomes."""

    transition: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.transition, dtype=float)
        if t.shape != (4, 4):
            raise ValidationError(f"transition must be 4x4, got {t.shape}")
        if ((t < 0) | (t > 1)).any():
            raise ValidationError("transition entries must lie in [0,1]")
        if np.abs(t.sum(axis=1) - 1.0).max() > 1e-12:
            raise ValidationError("transition rows must sum to 1")
        t.flags.writeable = False
        object.__setattr__(self, "transition", t)


@dataclass(frozen=True)
class ZDSpec:
    """Coefficients of the vanishing stationary combination
    alpha * f_Pat + beta * f_Gene + gamma."""

    alpha: float
    beta: float
    gamma: float
    target_score: float | None = None

    def __post_init__(self):
        if self.alpha == 0.0 and self.beta == 0.0:
            raise ValidationError("a zero-determinant spec needs (alpha, beta) != (0, 0)")


@dataclass(frozen=True)
class StationaryResult:
    """Long-run scores with the outcome distribution that produced them.

    ``ergodic`` is False when the chain has no unique stationary
    distribution; the scores are then long-run averages of the
    deterministic trajectory started from ``start`` (method "trajectory").
    """

    score_pat: float
    score_gene: float
    distribution: np.ndarray  # marginal over the four outcomes
    ergodic: bool
    method: str  # "stationary" | "trajectory"
    start: str = "CC"


@dataclass(frozen=True)
class MatchResult:
    avg_pat: float
    avg_gene: float
    rounds: int
    seed: int
    outcome_counts: tuple[int, int, int, int]
    coop_rate_pat: float
    coop_rate_gene: float
    first_outcome: str = "CC"


@dataclass(frozen=True)
class SelfControlReport:
    """Evidence that nobody can pin their own long-run score.

    The (alpha, gamma) grid is scanned at the given resolution over the
    whole region that could possibly map into the probability cube.  Every
    candidate either leaves [0,1]^4 or, once simulated against the random
    opponents, shows an own-score spread above ``spread_tol``.  The joint
    all-take lock-in (both players stuck at mutual taking) is excluded: it
    fixes both scores jointly, which is not a unilateral choice.
    """

    payoffs: IDDPayoffs
    trials: int
    resolution: float
    seed: int
    spread_tol: float
    grid_points: int
    candidates_in_cube: int  # alpha != 0, the genuinely self-targeting ones
    trivial_in_cube: int  # alpha == 0 grid points (no defined own target)
    tested: int
    min_spread: float | None
    counterexample: MemoryOneStrategy | None
    insufficient_trials: bool
    notes: tuple[str, ...]


def payoff_vectors(payoffs: IDDPayoffs) -> tuple[np.ndarray, np.ndarray]:
    """Per-outcome payoffs (f_Pat, f_Gene) over (CC, CD, DC, DD)."""
    f_pat = np.array([payoffs.W, payoffs.Z, payoffs.Y, payoffs.X])
    f_gene = np.array([payoffs.W, payoffs.Y, payoffs.Z, payoffs.X])
    return f_pat, f_gene


def joint_chain(p: MemoryOneStrategy, q: MemoryOneStrategy) -> JointChain:
    """Transition matrix of the joint outcome chain for two memory-one
    strategies; moves are drawn independently given the previous outcome."""
    pp = p.table()
    qq = q.table()
    rows = np.empty((4, 4))
    for s in range(4):
        cp = pp[s]
        cg = qq[MIRROR[s]]
        rows[s] = (cp * cg, cp * (1 - cg), (1 - cp) * cg, (1 - cp) * (1 - cg))
    return JointChain(rows)


def _mirror_map(memory: int) -> np.ndarray:
    """State reindexing that mirrors every outcome digit (CD <-> DC)."""
    idx = np.arange(4**memory)
    out = np.zeros_like(idx)
    for d in range(memory):
        digit = (idx // 4**d) % 4
        swapped = np.where(digit == 1, 2, np.where(digit == 2, 1, digit))
        out += swapped * 4**d
    return out


def _lift_table(strategy, memory: int) -> np.ndarray:
    """View a strategy as a table over ``memory``-outcome histories by
    ignoring everything older than its own memory."""
    own = strategy.table()
    k = strategy.memory
    if memory < k:
        raise ValidationError(f"cannot lift memory {k} to shorter memory {memory}")
    if memory == k:
        return own
    return own[np.arange(4**memory) % 4**k]


def _transition_for(pat, gene) -> tuple[int, np.ndarray]:
    """Joint chain over histories long enough for both strategies."""
    memory = max(pat.memory, gene.memory)
    n = 4**memory
    pat_coop = _lift_table(pat, memory)
    gene_coop = _lift_table(gene, memory)[_mirror_map(memory)]
    probs = np.stack(
        [
            pat_coop * gene_coop,
            pat_coop * (1 - gene_coop),
            (1 - pat_coop) * gene_coop,
            (1 - pat_coop) * (1 - gene_coop),
        ],
        axis=1,
    )
    nxt = (np.arange(n) % 4 ** (memory - 1) * 4)[:, None] + np.arange(4)[None, :]
    transition = np.zeros((n, n))
    transition[np.arange(n)[:, None], nxt] = probs
    return memory, transition


def _unique_stationary(transition: np.ndarray, tol: float = 1e-10):
    """Stationary distribution when it is unique, else None."""
    n = transition.shape[0]
    a = transition.T - np.eye(n)
    _, singular, vt = np.linalg.svd(a)
    null_dim = int(np.sum(singular < tol))
    if null_dim != 1:
        return None
    v = vt[-1]
    if v.sum() < 0:
        v = -v
    v = np.clip(v, 0.0, None)
    v = v / v.sum()
    if np.abs(v @ transition - v).max() > 1e-8:
        return None
    return v


def _trajectory_average(transition: np.ndarray, start: int, steps_log2: int = 20) -> np.ndarray:
    """Average state distribution over the first 2**steps_log2 (> 10^6)
    steps of the chain started at ``start``, computed by doubling."""
    n = transition.shape[0]
    partial = np.eye(n)
    power = transition.copy()
    for _ in range(steps_log2):
        partial = partial + power @ partial
        power = power @ power
    d0 = np.zeros(n)
    d0[start] = 1.0
    return (d0 @ partial) / 2.0**steps_log2


def _history_state(outcome: int, memory: int) -> int:
    """Index of the history made of ``outcome`` repeated ``memory`` times."""
    return outcome * (4**memory - 1) // 3


def stationary_scores(pat, gene, payoffs: IDDPayoffs, first_outcome: str = "CC") -> StationaryResult:
    """Exact long-run scores for a pair of strategies.

    For memory-one pairs this solves the 4-state chain; table strategies
    are handled on the lifted history chain (dense solve up to memory
    MAX_EXACT_MEMORY).  When the stationary distribution is not unique the
    result falls back to averaging the deterministic trajectory from the
    ``first_outcome`` history and is flagged non-ergodic.
    """
    if first_outcome not in OUTCOME_INDEX:
        raise ValidationError(f"first_outcome must be one of {OUTCOMES}")
    memory, transition = _transition_for(pat, gene)
    if memory > MAX_EXACT_MEMORY:
        raise ValidationError(
            f"exact scores limited to memory {MAX_EXACT_MEMORY}; simulate instead"
        )
    v = _unique_stationary(transition)
    if v is not None:
        ergodic, method = True, "stationary"
    else:
        start = _history_state(OUTCOME_INDEX[first_outcome], memory)
        v = _trajectory_average(transition, start)
        ergodic, method = False, "trajectory"
    marginal = v.reshape(-1, 4).sum(axis=0) if memory > 1 else v
    f_pat, f_gene = payoff_vectors(payoffs)
    return StationaryResult(
        score_pat=float(marginal @ f_pat),
        score_gene=float(marginal @ f_gene),
        distribution=marginal,
        ergodic=ergodic,
        method=method,
        start=first_outcome,
    )


def _is_irreducible(transition: np.ndarray) -> bool:
    n = transition.shape[0]
    reach = (transition > 1e-15).astype(np.int8)
    np.fill_diagonal(reach, 1)
    for _ in range(int(np.ceil(np.log2(n))) + 1):
        reach = ((reach @ reach) > 0).astype(np.int8)
    return bool(reach.all())


def determinant_score(p: MemoryOneStrategy, q: MemoryOneStrategy, f) -> float:
    """Stationary average of f via the vanishing-determinant identity.

    The chain must be ergodic (irreducible); for lock-in pairs such as
    mutual always-give this raises and ``stationary_scores`` handles the
    fallback.  Agrees with the linear-solve stationary average whenever
    defined.
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (4,):
        raise ValidationError(f"f must be a 4-vector, got shape {f.shape}")
    chain = joint_chain(p, q)
    if not _is_irreducible(chain.transition):
        raise DegenerateChainError(
            "joint chain is not ergodic; use stationary_scores, which falls back "
            "to trajectory averaging"
        )
    p1, p2, p3, p4 = p.probs
    q1, q2, q3, q4 = q.probs

    def det_with(last_column: np.ndarray) -> float:
        m = np.array(
            [
                [-1 + p1 * q1, -1 + p1, -1 + q1, last_column[0]],
                [p2 * q3, -1 + p2, q3, last_column[1]],
                [p3 * q2, p3, -1 + q2, last_column[2]],
                [p4 * q4, p4, q4, last_column[3]],
            ]
        )
        return float(np.linalg.det(m))

    normalizer = det_with(np.ones(4))
    if abs(normalizer) < 1e-12:
        raise DegenerateChainError(
            "normalizing determinant vanishes; use stationary_scores, which falls "
            "back to trajectory averaging"
        )
    return det_with(f) / normalizer


def zd_strategy(spec: ZDSpec, payoffs: IDDPayoffs) -> MemoryOneStrategy:
    """Memory-one strategy enforcing the spec's vanishing combination.

    The strategy is p = ptilde + (1, 1, 0, 0) with
    ptilde = alpha * f_Pat + beta * f_Gene + gamma; it only exists when
    that lands inside the probability cube.
    """
    f_pat, f_gene = payoff_vectors(payoffs)
    ptilde = spec.alpha * f_pat + spec.beta * f_gene + spec.gamma
    p = ptilde + np.array([1.0, 1.0, 0.0, 0.0])
    bad = [
        f"p{i + 1}={value:.6g}"
        for i, value in enumerate(p)
        if not -1e-12 <= value <= 1 + 1e-12
    ]
    if bad:
        raise ValidationError(
            "spec leaves the probability cube: " + ", ".join(bad)
        )
    return MemoryOneStrategy(tuple(np.clip(p, 0.0, 1.0)))


def _distance_to_boundary(p: np.ndarray) -> float:
    return float(np.minimum(p, 1.0 - p).min())


def zd_equalizer(payoffs: IDDPayoffs, target: float) -> MemoryOneStrategy:
    """Strategy forcing the opponent's long-run score to ``target``.

    Solves ptilde = beta * (f_Gene - target) over the one-parameter family
    beta != 0, keeping p = ptilde + (1, 1, 0, 0) inside the cube.  Among
    feasible betas the one keeping p farthest from the cube boundary is
    chosen (ties: larger mean distance, then smaller |beta|).  Raises
    InfeasibleTargetError naming the violated bound when no beta works;
    forceable targets lie within [X, W].
    """
    _, f_gene = payoff_vectors(payoffs)
    base = np.array([1.0, 1.0, 0.0, 0.0])
    slope = f_gene - target

    lo, hi = -np.inf, np.inf
    for b0, m in zip(base, slope):
        if abs(m) < 1e-15:
            continue  # p_i is constant at b0, already in [0,1]
        ends = sorted(((0.0 - b0) / m, (1.0 - b0) / m))
        lo, hi = max(lo, ends[0]), min(hi, ends[1])

    def infeasible() -> InfeasibleTargetError:
        if target > payoffs.W:
            reason = f"target {target} is above the mutual-give payoff W={payoffs.W}"
        elif target < payoffs.X:
            reason = f"target {target} is below the mutual-take payoff X={payoffs.X}"
        else:
            reason = f"no cooperation probabilities in [0,1]^4 force {target}"
        return InfeasibleTargetError(
            f"{reason}; forceable scores lie within [X, W] = "
            f"[{payoffs.X}, {payoffs.W}]",
            target=target,
            lower=payoffs.X,
            upper=payoffs.W,
        )

    eps = 1e-9
    if lo > hi:
        raise infeasible()
    intervals = [
        (a, b)
        for a, b in ((lo, min(hi, -eps)), (max(lo, eps), hi))
        if a <= b and np.isfinite(a) and np.isfinite(b)
    ]
    if not intervals:
        raise infeasible()

    # The objective min_i min(p_i, 1-p_i) is concave piecewise-linear in
    # beta, so its maximum sits at an interval end or where two of the
    # eight affine pieces cross.
    lines = [(m, b0) for b0, m in zip(base, slope)]
    lines += [(-m, 1.0 - b0) for b0, m in zip(base, slope)]
    candidates = []
    for a, b in intervals:
        candidates += [a, b]
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                m1, c1 = lines[i]
                m2, c2 = lines[j]
                if abs(m1 - m2) < 1e-15:
                    continue
                beta = (c2 - c1) / (m1 - m2)
                if a <= beta <= b:
                    candidates.append(beta)

    best = None
    for beta in candidates:
        p = np.clip(base + beta * slope, 0.0, 1.0)
        key = (_distance_to_boundary(p), float(np.minimum(p, 1 - p).mean()), -abs(beta))
        if best is None or key > best[0]:
            best = (key, beta, p)
    if best is None:
        raise infeasible()
    return MemoryOneStrategy(tuple(best[2]))


def verify_equalizer(
    payoffs: IDDPayoffs,
    strategy: MemoryOneStrategy,
    target: float,
    opponents: int = 100,
    seed: int = 0,
) -> dict:
    """Exact-chain check that the opponent's score is pinned at ``target``
    for randomly drawn memory-one opponents."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(opponents):
        q = MemoryOneStrategy(tuple(rng.uniform(0.05, 0.95, 4)))
        result = stationary_scores(strategy, q, payoffs)
        worst = max(worst, abs(result.score_gene - target))
    return {"opponents": opponents, "seed": seed, "max_abs_error": worst}


def check_no_self_control(
    payoffs: IDDPayoffs,
    trials: int,
    resolution: float = 0.01,
    seed: int = 0,
    spread_tol: float = 1e-3,
) -> SelfControlReport:
    """Scan the self-targeting family ptilde = alpha * f_Pat + gamma for a
    strategy that holds the owner's own score constant.

    The (alpha, gamma) grid covers every pair that could map into the
    cube: |alpha| <= 1/(Y - X) (else the DC and DD entries cannot both be
    probabilities) and |gamma| <= 1 + |alpha| * max|payoff|.  In-cube
    candidates are played against ``trials`` random opponents and the
    spread of the own score is measured; the all-take corner is excluded
    as a joint, not unilateral, lock-in.
    """
    if trials < 1:
        raise ValidationError("trials must be at least 1")
    f_pat, _ = payoff_vectors(payoffs)
    a_max = 1.0 / (payoffs.Y - payoffs.X)
    g_max = 1.0 + a_max * max(abs(v) for v in (payoffs.W, payoffs.X, payoffs.Y, payoffs.Z))
    n_a = int(np.floor(a_max / resolution))
    n_g = int(np.floor(g_max / resolution))
    alphas = np.arange(-n_a, n_a + 1) * resolution
    gammas = np.arange(-n_g, n_g + 1) * resolution

    ptilde = alphas[:, None, None] * f_pat[None, None, :] + gammas[None, :, None]
    p = ptilde + np.array([1.0, 1.0, 0.0, 0.0])
    in_cube = ((p >= -1e-12) & (p <= 1 + 1e-12)).all(axis=2)
    alpha_grid = np.broadcast_to(alphas[:, None], in_cube.shape)

    nontrivial_mask = in_cube & (alpha_grid != 0.0)
    trivial_mask = in_cube & (alpha_grid == 0.0)

    rng = np.random.default_rng(seed)
    opponents = [
        MemoryOneStrategy(tuple(rng.uniform(0.05, 0.95, 4))) for _ in range(trials)
    ]

    notes = [
        "all-take lock-in excluded: mutual taking fixes both scores at (X, X) "
        "jointly, which is not unilateral control"
    ]
    insufficient = trials < 2
    if insufficient:
        notes.append("a single opponent cannot show a spread; result is inconclusive")

    min_spread = None
    counterexample = None
    tested = 0
    for mask in (nontrivial_mask, trivial_mask):
        for ai, gi in zip(*np.nonzero(mask)):
            candidate_probs = np.clip(p[ai, gi], 0.0, 1.0)
            if np.all(candidate_probs == 0.0):
                continue  # the joint all-take lock-in
            candidate = MemoryOneStrategy(tuple(candidate_probs))
            scores = [
                stationary_scores(candidate, q, payoffs).score_pat for q in opponents
            ]
            spread = max(scores) - min(scores)
            tested += 1
            if min_spread is None or spread < min_spread:
                min_spread = spread
            if spread <= spread_tol and mask is nontrivial_mask and not insufficient:
                counterexample = candidate

    return SelfControlReport(
        payoffs=payoffs,
        trials=trials,
        resolution=resolution,
        seed=seed,
        spread_tol=spread_tol,
        grid_points=int(alphas.size * gammas.size),
        candidates_in_cube=int(nontrivial_mask.sum()),
        trivial_in_cube=int(trivial_mask.sum()),
        tested=tested,
        min_spread=min_spread,
        counterexample=counterexample,
        insufficient_trials=insufficient,
        notes=tuple(notes),
    )


def _simulate_tables(
    pat_tables: np.ndarray,
    gene_tables: np.ndarray,
    memory: int,
    payoffs: IDDPayoffs,
    rounds: int,
    seed: int,
    first_outcome: int = 0,
    blocks: int | None = None,
    chunk: int = 4096,
):
    """Vectorized match simulation across lanes of strategy pairs.

    ``pat_tables`` and ``gene_tables`` have shape (lanes, 4**memory) and
    are indexed by each owner's own-perspective history.  Returns per-lane
    average payoffs, outcome counts, cooperation counts, and, when
    ``blocks`` is given, per-block payoff means for error estimation.
    """
    lanes = pat_tables.shape[0]
    n = 4**memory
    if pat_tables.shape != (lanes, n) or gene_tables.shape != (lanes, n):
        raise ValidationError("strategy tables do not match the declared memory")
    gene_coop = gene_tables[:, _mirror_map(memory)]
    f_pat, f_gene = payoff_vectors(payoffs)

    if blocks:
        if rounds % blocks:
            raise ValidationError("rounds must be divisible by blocks")
        chunk = rounds // blocks
    lane_idx = np.arange(lanes)
    state = np.full(lanes, _history_state(first_outcome, memory), dtype=np.int64)
    shift = 4 ** (memory - 1)
    rng = np.random.default_rng(seed)

    sum_pat = np.zeros(lanes)
    sum_gene = np.zeros(lanes)
    counts = np.zeros((lanes, 4), dtype=np.int64)
    block_means = np.zeros((lanes, blocks, 2)) if blocks else None

    done = 0
    block_no = 0
    outcomes = np.empty((chunk, lanes), dtype=np.int64)
    while done < rounds:
        size = min(chunk, rounds - done)
        draws = rng.random((size, 2, lanes))
        for i in range(size):
            coop_pat = draws[i, 0] < pat_tables[lane_idx, state]
            coop_gene = draws[i, 1] < gene_coop[lane_idx, state]
            o = ((~coop_pat).astype(np.int64) << 1) | (~coop_gene).astype(np.int64)
            outcomes[i] = o
            state = (state % shift) * 4 + o
        got = outcomes[:size]
        pat_chunk = f_pat[got].sum(axis=0)
        gene_chunk = f_gene[got].sum(axis=0)
        sum_pat += pat_chunk
        sum_gene += gene_chunk
        for value in range(4):
            counts[:, value] += (got == value).sum(axis=0)
        if blocks:
            block_means[:, block_no, 0] = pat_chunk / size
            block_means[:, block_no, 1] = gene_chunk / size
            block_no += 1
        done += size

    return sum_pat / rounds, sum_gene / rounds, counts, block_means


def simulate_match(
    pat,
    gene,
    payoffs: IDDPayoffs,
    rounds: int,
    seed: int,
    first_outcome: str = "CC",
) -> MatchResult:
    """Play one seeded match; deterministic for identical arguments.

    Strategies may be memory-one or lookup tables over up to
    MAX_TABLE_MEMORY previous outcomes.  Before enough history exists the
    missing rounds count as ``first_outcome``.
    """
    if rounds < 1:
        raise ValidationError("rounds must be at least 1")
    if first_outcome not in OUTCOME_INDEX:
        raise ValidationError(f"first_outcome must be one of {OUTCOMES}")
    memory = max(pat.memory, gene.memory)
    avg_pat, avg_gene, counts, _ = _simulate_tables(
        _lift_table(pat, memory)[None, :],
        _lift_table(gene, memory)[None, :],
        memory,
        payoffs,
        rounds,
        seed,
        first_outcome=OUTCOME_INDEX[first_outcome],
    )
    outcome_counts = tuple(int(c) for c in counts[0])
    return MatchResult(
        avg_pat=float(avg_pat[0]),
        avg_gene=float(avg_gene[0]),
        rounds=rounds,
        seed=seed,
        outcome_counts=outcome_counts,
        coop_rate_pat=(outcome_counts[0] + outcome_counts[1]) / rounds,
        coop_rate_gene=(outcome_counts[0] + outcome_counts[2]) / rounds,
        first_outcome=first_outcome,
    )
