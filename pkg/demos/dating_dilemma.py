"""Long-run give and take: stationary scores and zero-determinant control.

We walk through the iterated dating dilemma with the conventional payoffs
(W, X, Y, Z) = (3, 1, 5, 0): exact long-run scores for a few classic
strategy pairs, then the unsettling part: Pat can choose cooperation
probabilities that pin Gene's long-run score to any value between mutual
taking (X) and mutual giving (W), no matter how Gene plays, while no
strategy can pin Pat's own score.
"""

import numpy as np

from dyadgames import (
    ALWAYS_GIVE,
    ALWAYS_TAKE,
    DEFAULT_IDD_PAYOFFS,
    TIT_FOR_TAT,
    WIN_STAY_LOSE_SHIFT,
    MemoryOneStrategy,
    check_no_self_control,
    simulate_match,
    stationary_scores,
    verify_equalizer,
    zd_equalizer,
)

payoffs = DEFAULT_IDD_PAYOFFS
print(f"payoffs: W={payoffs.W} X={payoffs.X} Y={payoffs.Y} Z={payoffs.Z}\n")

classics = {
    "always-give": ALWAYS_GIVE,
    "always-take": ALWAYS_TAKE,
    "tit-for-tat": TIT_FOR_TAT,
    "win-stay-lose-shift": WIN_STAY_LOSE_SHIFT,
}
print("exact long-run scores (Pat vs Gene):")
for name_p, p in classics.items():
    for name_g, g in classics.items():
        r = stationary_scores(p, g, payoffs)
        flag = "" if r.ergodic else "  (lock-in from a mutual-give start)"
        print(f"  {name_p:20s} vs {name_g:20s} -> ({r.score_pat:.2f}, {r.score_gene:.2f}){flag}")

target = 2.0
equalizer = zd_equalizer(payoffs, target)
print(f"\nequalizer pinning Gene at {target}: p = {np.round(equalizer.probs, 3).tolist()}")
summary = verify_equalizer(payoffs, equalizer, target, opponents=50, seed=11)
print(f"checked against {summary['opponents']} random opponents: max error {summary['max_abs_error']:.1e}")

wild = MemoryOneStrategy((0.9, 0.1, 0.8, 0.3))
match = simulate_match(equalizer, wild, payoffs, rounds=200_000, seed=11)
print(
    f"one 200k-round match vs an arbitrary opponent: Gene averages {match.avg_gene:.3f} "
    f"(Pat gets {match.avg_pat:.3f}, which Pat does NOT control)"
)

report = check_no_self_control(payoffs, trials=50, seed=11)
print(
    f"\nself-control scan: {report.grid_points} (alpha, gamma) grid points, "
    f"{report.candidates_in_cube} valid self-targeting strategies found"
)
print("nobody can unilaterally pin their own score; only the partner's.")
