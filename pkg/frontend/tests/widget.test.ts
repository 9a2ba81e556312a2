import { describe, expect, it } from "vitest";

import {
	canSubmit,
	emptyWidget,
	remainingBudget,
	setSlot,
	spent,
} from "../src/answer-widget.js";

describe("answer widget", () => {
	it("starts empty with the full budget", () => {
		const w = emptyWidget(10);
		expect(w.slots).toEqual([0, 0, 0]);
		expect(remainingBudget(w)).toBe(10);
		expect(canSubmit(w)).toBe(false);
	});

	it("enables submit when slots hit the budget exactly", () => {
		let w = emptyWidget(10);
		w = setSlot(w, 0, 2);
		w = setSlot(w, 1, 3);
		w = setSlot(w, 2, 5);
		expect(spent(w)).toBe(10);
		expect(remainingBudget(w)).toBe(0);
		expect(canSubmit(w)).toBe(true);
	});

	it("blocks overspent triples and shows the negative budget", () => {
		let w = emptyWidget(10);
		w = setSlot(w, 0, 4);
		w = setSlot(w, 1, 4);
		w = setSlot(w, 2, 4);
		expect(remainingBudget(w)).toBe(-2);
		expect(canSubmit(w)).toBe(false);
	});

	it("blocks underspent triples", () => {
		let w = emptyWidget(10);
		w = setSlot(w, 0, 3);
		w = setSlot(w, 1, 3);
		w = setSlot(w, 2, 3);
		expect(remainingBudget(w)).toBe(1);
		expect(canSubmit(w)).toBe(false);
	});

	it("normalizes garbage input to safe integers", () => {
		let w = emptyWidget(10);
		w = setSlot(w, 0, "7.9");
		expect(w.slots[0]).toBe(7);
		w = setSlot(w, 0, -3);
		expect(w.slots[0]).toBe(0);
		w = setSlot(w, 0, "banana");
		expect(w.slots[0]).toBe(0);
	});

	it("honors non-default budgets", () => {
		let w = emptyWidget(50);
		w = setSlot(w, 0, 50);
		expect(canSubmit(w)).toBe(true);
		w = setSlot(w, 1, 1);
		expect(canSubmit(w)).toBe(false);
	});
});
