/**
 * The guided session flow, one state at a time.
 *
 * Partner 1 creates the session and gets a share link for partner 2; each
 * partner then walks an answer wizard (one question per screen with a
 * budget indicator), submits, and sits on a polling waiting screen until
 * the joint report is available. A flow instance holds exactly one
 * partner's token; the other partner's token only ever appears inside the
 * share link text and is never sent in any request from this page.
 *
 * Transient network failures retry with exponential backoff; a 409 on
 * submit (answers already in, say from another tab) lands on a friendly
 * "already submitted" screen and proceeds to waiting.
 */

import {
	ApiError,
	type FormDoc,
	type ReportDoc,
	SessionApi,
} from "./api.js";
import {
	type AnswerWidgetState,
	canSubmit,
	emptyWidget,
} from "./answer-widget.js";
import { type ReportViewModel, reportView } from "./report-view.js";

export type FlowState =
	| { kind: "idle" }
	| { kind: "share"; sessionId: string; myLink: string; partnerLink: string }
	| {
			kind: "answering";
			questionIndex: number;
			questionCount: number;
			prompt: string;
			outcomes: [string, string, string];
			widget: AnswerWidgetState;
	  }
	| { kind: "submitting" }
	| { kind: "already-submitted" }
	| { kind: "waiting"; polls: number }
	| { kind: "report"; view: ReportViewModel; report: ReportDoc }
	| { kind: "error"; message: string };

export interface FlowOptions {
	pollIntervalMs?: number;
	pollJitterMs?: number;
	maxRetries?: number;
	sleep?: (ms: number) => Promise<void>;
	random?: () => number;
	onState?: (state: FlowState) => void;
}

const defaultSleep = (ms: number) =>
	new Promise<void>((resolve) => setTimeout(resolve, ms));

export class SessionFlow {
	state: FlowState = { kind: "idle" };

	private sessionId = "";
	private token = "";
	private partnerId = 0;
	private form: FormDoc | null = null;
	private answers: number[][] = [];

	private readonly pollIntervalMs: number;
	private readonly pollJitterMs: number;
	private readonly maxRetries: number;
	private readonly sleep: (ms: number) => Promise<void>;
	private readonly random: () => number;
	private readonly onState: (state: FlowState) => void;

	constructor(
		private readonly api: SessionApi,
		options: FlowOptions = {},
	) {
		this.pollIntervalMs = options.pollIntervalMs ?? 2000;
		this.pollJitterMs = options.pollJitterMs ?? 500;
		this.maxRetries = options.maxRetries ?? 5;
		this.sleep = options.sleep ?? defaultSleep;
		this.random = options.random ?? Math.random;
		this.onState = options.onState ?? (() => {});
	}

	private setState(state: FlowState): FlowState {
		this.state = state;
		this.onState(state);
		return state;
	}

	/** Retry transient failures; API errors (4xx) pass straight through. */
	private async withRetry<T>(call: () => Promise<T>): Promise<T> {
		let attempt = 0;
		for (;;) {
			try {
				return await call();
			} catch (error) {
				if (error instanceof ApiError || attempt >= this.maxRetries) {
					throw error;
				}
				await this.sleep(Math.min(500 * 2 ** attempt, 8000));
				attempt += 1;
			}
		}
	}

	/** Partner 1 entry point: create the session, surface the share link. */
	async create(): Promise<FlowState> {
		const created = await this.withRetry(() => this.api.createSession());
		this.sessionId = created.session_id;
		this.partnerId = 1;
		this.token = created.partner_tokens[0];
		return this.setState({
			kind: "share",
			sessionId: created.session_id,
			myLink: created.partner_links[0],
			partnerLink: created.partner_links[1],
		});
	}

	/** Either partner entry point with a session id and own token. */
	async join(
		sessionId: string,
		partnerId: number,
		token: string,
	): Promise<FlowState> {
		this.sessionId = sessionId;
		this.partnerId = partnerId;
		this.token = token;
		return this.startAnswering();
	}

	/** Fetch the form and show the first question (or skip to waiting). */
	async startAnswering(): Promise<FlowState> {
		try {
			const fetched = await this.withRetry(() =>
				this.api.fetchForm(this.sessionId, this.token),
			);
			this.form = fetched.form;
			this.answers = [];
			if (fetched.already_submitted) {
				this.setState({ kind: "already-submitted" });
				return this.setState({ kind: "waiting", polls: 0 });
			}
			return this.showQuestion(0);
		} catch (error) {
			return this.fail(error);
		}
	}

	private showQuestion(index: number): FlowState {
		const form = this.form;
		if (!form) {
			return this.fail(new Error("no form loaded"));
		}
		const question = form.questions[index];
		const total =
			this.partnerId === 1 ? question.partner1_total : question.partner2_total;
		return this.setState({
			kind: "answering",
			questionIndex: index,
			questionCount: form.questions.length,
			prompt: question.prompt,
			outcomes: question.outcomes,
			widget: emptyWidget(total),
		});
	}

	/** Live widget edit; the submit button follows canSubmit. */
	updateWidget(widget: AnswerWidgetState): FlowState {
		if (this.state.kind !== "answering") {
			return this.state;
		}
		return this.setState({ ...this.state, widget });
	}

	/** Lock in the current question; invalid triples are refused here and
	 * the budget indicator explains why. */
	async confirmAnswer(): Promise<FlowState> {
		if (this.state.kind !== "answering") {
			return this.state;
		}
		const { widget, questionIndex, questionCount } = this.state;
		if (!canSubmit(widget)) {
			return this.state;
		}
		this.answers[questionIndex] = [...widget.slots];
		if (questionIndex + 1 < questionCount) {
			return this.showQuestion(questionIndex + 1);
		}
		return this.submit();
	}

	private async submit(): Promise<FlowState> {
		this.setState({ kind: "submitting" });
		try {
			await this.withRetry(() =>
				this.api.submitAnswers(this.sessionId, this.token, this.answers),
			);
		} catch (error) {
			if (error instanceof ApiError && error.isConflict) {
				this.setState({ kind: "already-submitted" });
				return this.setState({ kind: "waiting", polls: 0 });
			}
			return this.fail(error);
		}
		return this.setState({ kind: "waiting", polls: 0 });
	}

	/** Poll until the report arrives; resolves with the report state. */
	async waitForReport(maxPolls = 300): Promise<FlowState> {
		for (let polls = 1; polls <= maxPolls; polls += 1) {
			let outcome;
			try {
				outcome = await this.withRetry(() =>
					this.api.fetchReport(this.sessionId, this.token),
				);
			} catch (error) {
				return this.fail(error);
			}
			if (outcome.status === "ready") {
				return this.setState({
					kind: "report",
					view: reportView(outcome.report),
					report: outcome.report,
				});
			}
			this.setState({ kind: "waiting", polls });
			await this.sleep(this.pollIntervalMs + this.random() * this.pollJitterMs);
		}
		return this.fail(new Error("gave up waiting for the report"));
	}

	private fail(error: unknown): FlowState {
		const message = error instanceof Error ? error.message : String(error);
		return this.setState({ kind: "error", message });
	}
}
