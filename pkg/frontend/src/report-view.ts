/**
 * View model and balance-square rendering for the final report.
 *
 * Pure presentation: every number shown is lifted verbatim from the
 * service's report document. The square plots partner 1's my-way
 * probability on x and partner 2's on y; the cyan region below the
 * diagonal is where partner 1 dominates, the magenta region above is
 * partner 2's, couples on the diagonal are balanced, and (1, 1) is the
 * happy corner.
 */

import type { ReportDoc } from "./api.js";

export interface ReportViewModel {
	verdictText: string;
	K: number;
	KMax: number;
	K1: number;
	K2: number;
	P1: number;
	P2: number;
	point: [number, number];
	region: string;
	mode: string;
}

const VERDICT_TEXT: Record<string, string> = {
	partner1_dominant: "Partner 1 gets their way more",
	partner2_dominant: "Partner 2 gets their way more",
	balanced: "Balanced",
};

export function reportView(report: ReportDoc): ReportViewModel {
	return {
		verdictText: VERDICT_TEXT[report.verdict] ?? report.verdict,
		K: report.K,
		KMax: report.K_max,
		K1: report.K1,
		K2: report.K2,
		P1: report.P1,
		P2: report.P2,
		point: report.balance_point,
		region: report.region,
		mode: report.mode,
	};
}

export const REGION_COLORS: Record<string, string> = {
	cyan: "#7fdddd",
	magenta: "#dd7fdd",
	diagonal: "#555555",
};

/** SVG of the balance square with the couple's point marked. */
export function balanceSquareSvg(view: ReportViewModel, size = 240): string {
	const [x, y] = view.point;
	const cx = Math.round(x * size * 100) / 100;
	const cy = Math.round((1 - y) * size * 100) / 100; // svg y grows downward
	const highlight = REGION_COLORS[view.region] ?? "#000000";
	return [
		`<svg xmlns="http://www.w3.org/2000/svg" width="${size}" height="${size}" viewBox="0 0 ${size} ${size}">`,
		// cyan: x > y, the triangle under the diagonal
		`<polygon points="0,${size} ${size},${size} ${size},0" fill="${REGION_COLORS.cyan}" data-region="cyan"/>`,
		// magenta: y > x, above the diagonal
		`<polygon points="0,${size} 0,0 ${size},0" fill="${REGION_COLORS.magenta}" data-region="magenta"/>`,
		`<line x1="0" y1="${size}" x2="${size}" y2="0" stroke="${REGION_COLORS.diagonal}" stroke-width="1" data-region="diagonal"/>`,
		`<circle cx="${cx}" cy="${cy}" r="5" fill="#222222" stroke="${highlight}" stroke-width="3" data-point="${x},${y}"/>`,
		`</svg>`,
	].join("");
}
