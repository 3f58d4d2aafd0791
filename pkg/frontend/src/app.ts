/** Wires the board and advice panel to one advisor session.
 *
 * Flow: create a session (first recommendation appears), play the
 * suggested or any other word in the real game, type it into the
 * active row, tap the tiles to match the game's colors, submit.  The
 * next recommendation replaces the previous one until the session is
 * won or six rows are used.
 */

import { AdviceView } from "./advice.js";
import { AdvisorClient, ApiError } from "./api.js";
import { BoardView } from "./board.js";
import { allGreen, isCompleteGuess } from "./tiles.js";
import type { TileColor } from "./types.js";

export class App {
    readonly element: HTMLElement;
    readonly board: BoardView;
    readonly advice: AdviceView;
    private readonly status: HTMLElement;
    private sessionId: string | null = null;

    constructor(
        private readonly client: AdvisorClient,
        doc: Document = document,
    ) {
        this.element = doc.createElement("div");
        this.element.className = "app";
        this.board = new BoardView(doc);
        this.advice = new AdviceView(doc);
        this.status = doc.createElement("p");
        this.status.className = "status";

        const submit = doc.createElement("button");
        submit.className = "submit";
        submit.textContent = "submit row";
        submit.addEventListener("click", () => void this.submitRow());

        const restart = doc.createElement("button");
        restart.className = "restart";
        restart.textContent = "new session";
        restart.addEventListener("click", () => void this.start());

        doc.addEventListener("keydown", (ev) => {
            if (ev.key === "Backspace") this.board.erase();
            else if (ev.key === "Enter") void this.submitRow();
            else if (/^[a-zA-Z]$/.test(ev.key)) this.board.type(ev.key);
        });

        this.element.append(this.board.element, submit, restart, this.status, this.advice.element);
    }

    async start(policyId = "default"): Promise<void> {
        this.board.reset();
        try {
            const created = await this.client.createSession(policyId);
            this.sessionId = created.session_id;
            this.advice.render(created.recommendation, false);
            this.status.textContent = `session ${created.session_id}`;
        } catch (err) {
            this.report(err);
        }
    }

    async submitRow(): Promise<void> {
        if (this.sessionId === null) return;
        const row = this.board.currentRow();
        if (!isCompleteGuess(row)) {
            this.status.textContent = "type all five letters first";
            return;
        }
        try {
            const resp = await this.client.sendFeedback(
                this.sessionId,
                row.letters,
                row.colors as TileColor[],
            );
            this.status.textContent = "";
            if (resp.won || allGreen(row)) {
                this.board.lock();
                this.advice.render(null, true);
            } else {
                this.board.commitRow();
                this.advice.render(resp, false);
            }
        } catch (err) {
            this.report(err);
        }
    }

    private report(err: unknown): void {
        this.status.textContent =
            err instanceof ApiError ? err.detail : `request failed: ${String(err)}`;
    }
}
