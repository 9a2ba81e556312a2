/**
 * DOM wiring: hash-routed entry, renders the current flow state into #app.
 *
 * Visiting the page bare offers to create a session; visiting through a
 * share link (#sid=...&partner=...&token=...) joins that session as that
 * partner. The page keeps only its own token.
 */

import { SessionApi, parsePartnerLink } from "./api.js";
import {
	canSubmit,
	remainingBudget,
	setSlot,
} from "./answer-widget.js";
import { type FlowState, SessionFlow } from "./flow.js";
import { balanceSquareSvg } from "./report-view.js";

const app = document.getElementById("app") as HTMLElement;
const api = new SessionApi("");
const flow = new SessionFlow(api, { onState: render });

function escapeHtml(text: string): string {
	return text.replace(/[&<>"']/g, (c) => `&#${c.charCodeAt(0)};`);
}

function render(state: FlowState): void {
	switch (state.kind) {
		case "idle":
			app.innerHTML = `
				<h1>The compatibility test</h1>
				<p>Ten questions, answered separately and blind. Create a session,
				send your partner their link, and compare only the final report.</p>
				<button id="create">Create a session</button>`;
			document.getElementById("create")?.addEventListener("click", () => {
				void flow.create();
			});
			break;
		case "share": {
			const partnerUrl = `${location.origin}${location.pathname}${state.partnerLink}`;
			app.innerHTML = `
				<h1>Session ready</h1>
				<p>Send <strong>partner 2</strong> this link, then answer your own questions.
				You will not see each other's answers.</p>
				<code>${escapeHtml(partnerUrl)}</code>
				<p><button id="start">Start answering</button></p>`;
			document.getElementById("start")?.addEventListener("click", () => {
				void flow.startAnswering();
			});
			break;
		}
		case "answering": {
			const { widget } = state;
			const remaining = remainingBudget(widget);
			const labels = ["A", "B", "C"];
			app.innerHTML = `
				<h2>Question ${state.questionIndex + 1} of ${state.questionCount}</h2>
				<p>${escapeHtml(state.prompt)}</p>
				${state.outcomes
					.map(
						(outcome, i) => `
					<label>${labels[i]}: ${escapeHtml(outcome)}
						<input type="number" min="0" step="1" id="slot${i}" value="${widget.slots[i]}">
					</label><br>`,
					)
					.join("")}
				<p>Budget left: <strong id="budget">${remaining}</strong> of ${widget.total}</p>
				<button id="next" ${canSubmit(widget) ? "" : "disabled"}>
					${state.questionIndex + 1 === state.questionCount ? "Submit" : "Next"}
				</button>`;
			for (const i of [0, 1, 2] as const) {
				document.getElementById(`slot${i}`)?.addEventListener("input", (ev) => {
					const value = (ev.target as HTMLInputElement).value;
					flow.updateWidget(setSlot(widget, i, value));
				});
			}
			document.getElementById("next")?.addEventListener("click", () => {
				void flow.confirmAnswer().then((next) => {
					if (next.kind === "waiting") {
						void flow.waitForReport();
					}
				});
			});
			break;
		}
		case "submitting":
			app.innerHTML = `<p>Sending your answers...</p>`;
			break;
		case "already-submitted":
			app.innerHTML = `
				<h2>Already submitted</h2>
				<p>Your answers are in. Waiting for your partner's.</p>`;
			break;
		case "waiting":
			app.innerHTML = `
				<h2>Waiting for your partner</h2>
				<p>The report appears as soon as both of you have submitted.
				Checked ${state.polls} time(s).</p>`;
			break;
		case "report": {
			const view = state.view;
			app.innerHTML = `
				<h1>${escapeHtml(view.verdictText)}</h1>
				<p>Satisfaction: <strong>${view.K}</strong> of ${view.KMax}
				(partner 1: ${view.K1}, partner 2: ${view.K2})</p>
				<p>Dominance differential: P1 = ${view.P1}, P2 = ${view.P2}</p>
				${balanceSquareSvg(view)}
				<p>The dot is your couple at (${view.point[0]}, ${view.point[1]});
				the top-right corner is balanced and maximally happy.</p>`;
			break;
		}
		case "error":
			app.innerHTML = `<p>Something went wrong: ${escapeHtml(state.message)}</p>
				<button onclick="location.reload()">Reload</button>`;
			break;
	}
}

const link = parsePartnerLink(location.hash);
if (link) {
	void flow
		.join(link.sessionId, link.partnerId, link.token)
		.then((state) => {
			if (state.kind === "waiting") {
				void flow.waitForReport();
			}
		});
} else {
	render(flow.state);
}
