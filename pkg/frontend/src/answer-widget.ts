/**
 * The constrained three-slot answer widget.
 *
 * A question has a point budget (usually 10) split across outcomes A, B,
 * and C. Submission only unlocks when the slots are nonnegative whole
 * numbers adding up to exactly the budget; the running budget indicator
 * goes negative when the partner has overspent. This mirrors the server's
 * validation so a valid widget never bounces.
 */

export interface AnswerWidgetState {
	readonly slots: [number, number, number];
	readonly total: number;
}

export function emptyWidget(total: number): AnswerWidgetState {
	return { slots: [0, 0, 0], total };
}

/** Set one slot from raw input; non-numbers count as 0, decimals truncate,
 * negatives clamp to 0. Overspending is allowed here and blocked at submit. */
export function setSlot(
	state: AnswerWidgetState,
	index: 0 | 1 | 2,
	rawValue: number | string,
): AnswerWidgetState {
	const parsed = typeof rawValue === "string" ? Number(rawValue) : rawValue;
	const value = Number.isFinite(parsed) ? Math.max(0, Math.trunc(parsed)) : 0;
	const slots: [number, number, number] = [...state.slots];
	slots[index] = value;
	return { slots, total: state.total };
}

export function spent(state: AnswerWidgetState): number {
	return state.slots[0] + state.slots[1] + state.slots[2];
}

/** Points still to hand out; negative when the slots overshoot the budget. */
export function remainingBudget(state: AnswerWidgetState): number {
	return state.total - spent(state);
}

export function canSubmit(state: AnswerWidgetState): boolean {
	return (
		state.slots.every((v) => Number.isInteger(v) && v >= 0) &&
		spent(state) === state.total
	);
}
