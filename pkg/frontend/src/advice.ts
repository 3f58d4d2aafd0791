/** Recommendation panel: action, suggested word, remaining candidates. */

import type { Recommendation } from "./types.js";

const ACTION_LABELS: Record<string, string> = {
    random: "random candidate",
    probs1: "opener list 1",
    probs2: "opener list 2",
    smart: "smart filter (all constraints)",
    exclude: "exclude filter (grays only)",
};

export class AdviceView {
    readonly element: HTMLElement;

    constructor(doc: Document = document) {
        this.element = doc.createElement("div");
        this.element.className = "advice";
    }

    render(rec: Recommendation | null, won: boolean): void {
        const doc = this.element.ownerDocument;
        this.element.textContent = "";
        if (won) {
            const banner = doc.createElement("p");
            banner.className = "won";
            banner.textContent = "Solved!";
            this.element.appendChild(banner);
            return;
        }
        if (rec === null) return;
        this.element.dataset.action = rec.action ?? "";

        const word = doc.createElement("p");
        word.className = "word";
        word.textContent = rec.word ?? "";
        this.element.appendChild(word);

        const action = doc.createElement("p");
        action.className = "action";
        action.textContent = `strategy: ${ACTION_LABELS[rec.action ?? ""] ?? rec.action}`;
        this.element.appendChild(action);

        const state = doc.createElement("p");
        state.className = "state";
        state.textContent =
            `last feedback: ${rec.state.greens} green, ${rec.state.yellows} yellow` +
            ` - ${rec.candidates_remaining} candidates left`;
        this.element.appendChild(state);

        if (rec.top_candidates.length > 0) {
            const list = doc.createElement("ul");
            list.className = "candidates";
            for (const w of rec.top_candidates) {
                const item = doc.createElement("li");
                item.textContent = w;
                list.appendChild(item);
            }
            this.element.appendChild(list);
        }
    }
}
