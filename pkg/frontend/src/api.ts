/**
 * Typed client for the quiz session service.
 *
 * Four endpoints: create a session, fetch the form by partner token,
 * submit answers, fetch the report. The client never computes scores;
 * everything rendered comes from the service's report document.
 */

export interface QuestionDoc {
	prompt: string;
	outcomes: [string, string, string];
	partner1_total: number;
	partner2_total: number;
}

export interface FormDoc {
	schema_version: number;
	kind: string;
	questions: QuestionDoc[];
}

export interface SessionCreated {
	session_id: string;
	state: string;
	partner_tokens: [string, string];
	partner_links: [string, string];
}

export interface FormFetched {
	session_id: string;
	partner_id: number;
	state: string;
	already_submitted: boolean;
	form: FormDoc;
}

export interface ReportDoc {
	schema_version: number;
	kind: string;
	mode: string;
	X: number;
	Y: number;
	P1: number;
	P2: number;
	K1: number;
	K2: number;
	K: number;
	K_max: number;
	balance_point: [number, number];
	verdict: string;
	region: string;
	questions: string[];
	answers?: unknown;
}

export type ReportPoll =
	| { status: "waiting" }
	| { status: "ready"; report: ReportDoc };

export class ApiError extends Error {
	constructor(
		readonly status: number,
		readonly detail: string,
		readonly violations: string[] = [],
	) {
		super(`HTTP ${status}: ${detail}`);
	}

	get isConflict(): boolean {
		return this.status === 409;
	}
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class SessionApi {
	constructor(
		private readonly baseUrl: string,
		private readonly fetchFn: FetchLike = (...args) => fetch(...args),
	) {}

	private async request(path: string, init?: RequestInit): Promise<unknown> {
		const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
		const body = await response.json();
		if (response.status === 202) {
			return { status: "waiting" };
		}
		if (!response.ok) {
			const detail =
				typeof body === "object" && body !== null && "detail" in body
					? String((body as { detail: unknown }).detail)
					: response.statusText;
			const violations =
				typeof body === "object" && body !== null && "violations" in body
					? ((body as { violations: string[] }).violations ?? [])
					: [];
			throw new ApiError(response.status, detail, violations);
		}
		return body;
	}

	async createSession(): Promise<SessionCreated> {
		return (await this.request("/sessions", {
			method: "POST",
			headers: { "content-type": "application/json" },
			body: JSON.stringify({}),
		})) as SessionCreated;
	}

	async fetchForm(sessionId: string, token: string): Promise<FormFetched> {
		const query = new URLSearchParams({ token });
		return (await this.request(
			`/sessions/${sessionId}/form?${query}`,
		)) as FormFetched;
	}

	async submitAnswers(
		sessionId: string,
		token: string,
		answers: number[][],
	): Promise<{ state: string }> {
		return (await this.request(`/sessions/${sessionId}/answers`, {
			method: "POST",
			headers: { "content-type": "application/json" },
			body: JSON.stringify({ token, answers }),
		})) as { state: string };
	}

	async fetchReport(sessionId: string, token: string): Promise<ReportPoll> {
		const query = new URLSearchParams({ token });
		const body = await this.request(`/sessions/${sessionId}/report?${query}`);
		if (
			typeof body === "object" &&
			body !== null &&
			(body as { status?: string }).status === "waiting"
		) {
			return { status: "waiting" };
		}
		return { status: "ready", report: body as ReportDoc };
	}
}

/** Parse a share link fragment: #sid=...&partner=...&token=... */
export function parsePartnerLink(
	fragment: string,
): { sessionId: string; partnerId: number; token: string } | null {
	const params = new URLSearchParams(fragment.replace(/^#/, ""));
	const sessionId = params.get("sid");
	const token = params.get("token");
	const partnerId = Number(params.get("partner"));
	if (!sessionId || !token || !(partnerId === 1 || partnerId === 2)) {
		return null;
	}
	return { sessionId, partnerId, token };
}
