/** End-to-end round trip against the real advisor service.
 *
 * Spawns the Python service, mounts the app in a jsdom document, and
 * drives it the way a player would: type the guessed word, tap tiles
 * to set colors, submit, read the rendered recommendation.  Rendered
 * values are cross-checked against the captured service responses.
 */

import { ChildProcess, spawn } from "node:child_process";
import { JSDOM } from "jsdom";
import { afterAll, beforeAll, describe, expect, it, vi } from "vitest";

import { AdvisorClient } from "../src/api.js";
import { App } from "../src/app.js";

const PORT = 8907;
const BASE = `http://127.0.0.1:${PORT}`;

const PROBS1 = ["bowne", "slaty", "prick", "faugh", "meved"];
const PROBS2 = ["looie", "saury", "chant", "bided", "primp"];

let server: ChildProcess;

async function waitForService(): Promise<void> {
    for (let i = 0; i < 80; i++) {
        try {
            const resp = await fetch(`${BASE}/policies`);
            if (resp.ok) return;
        } catch {
            // not up yet
        }
        await new Promise((r) => setTimeout(r, 250));
    }
    throw new Error("advisor service did not come up");
}

beforeAll(async () => {
    server = spawn(
        "python3",
        ["-m", "wordlab.cli", "serve", "--host", "127.0.0.1", "--port", String(PORT)],
        { stdio: "ignore" },
    );
    await waitForService();
});

afterAll(() => {
    server.kill();
});

interface Mounted {
    app: App;
    dom: JSDOM;
    client: AdvisorClient;
}

async function mount(): Promise<Mounted> {
    const dom = new JSDOM("<!DOCTYPE html><body></body>");
    const client = new AdvisorClient(BASE);
    const app = new App(client, dom.window.document);
    dom.window.document.body.appendChild(app.element);
    await app.start();
    return { app, dom, client };
}

function clickTile(m: Mounted, row: number, col: number): void {
    const el = m.app.board.element.querySelector(
        `[data-row="${row}"][data-col="${col}"]`,
    ) as HTMLElement;
    el.dispatchEvent(new m.dom.window.MouseEvent("click", { bubbles: true }));
}

function renderedWord(m: Mounted): string {
    return m.app.advice.element.querySelector(".word")?.textContent ?? "";
}

function renderedAction(m: Mounted): string {
    return m.app.advice.element.dataset.action ?? "";
}

describe("advisor round trip", () => {
    it("lists the bundled policies", async () => {
        const client = new AdvisorClient(BASE);
        const ids = (await client.listPolicies()).map((p) => p.policy_id);
        expect(ids).toContain("default");
        expect(ids).toContain("trained");
    });

    it("opens with an opener-list recommendation", async () => {
        const m = await mount();
        expect(renderedAction(m)).toMatch(/^probs[12]$/);
        expect([...PROBS1, ...PROBS2]).toContain(renderedWord(m));
    });

    it("all-gray bowne yields the next opener word", async () => {
        const m = await mount();
        const spy = vi.spyOn(m.client, "sendFeedback");
        for (const c of "bowne") m.app.board.type(c);
        await m.app.submitRow(); // default colors: all gray
        const resp = await spy.mock.results[0]?.value;
        expect(resp.won).toBe(false);
        expect(renderedAction(m)).toMatch(/^probs[12]$/);
        expect(renderedWord(m)).toBe(resp.word);
        expect([...PROBS1, ...PROBS2]).toContain(renderedWord(m));
    });

    it("a green row yields a smart word surviving the constraints", async () => {
        const m = await mount();
        const spy = vi.spyOn(m.client, "sendFeedback");
        for (const c of "bowne") m.app.board.type(c);
        clickTile(m, 0, 4); // gray -> yellow
        clickTile(m, 0, 4); // yellow -> green
        await m.app.submitRow();
        const resp = await spy.mock.results[0]?.value;
        expect(resp.action).toBe("smart");
        expect(renderedAction(m)).toBe("smart");
        const word = renderedWord(m);
        expect(word).toBe(resp.word);
        // Smart filter survival for the reported row: green 'e' at the
        // last position, 'b', 'o', 'w', 'n' absent everywhere.
        expect(word.endsWith("e")).toBe(true);
        for (const c of "bown") expect(word.includes(c)).toBe(false);
        for (const cand of resp.top_candidates) {
            expect(cand.endsWith("e")).toBe(true);
        }
    });

    it("an all-green row renders the solved banner and closes play", async () => {
        const m = await mount();
        for (const c of "crane") m.app.board.type(c);
        for (let col = 0; col < 5; col++) {
            clickTile(m, 0, col);
            clickTile(m, 0, col);
        }
        await m.app.submitRow();
        expect(m.app.advice.element.querySelector(".won")?.textContent).toBe(
            "Solved!",
        );
        m.app.board.type("x"); // board is locked after a win
        const firstTile = m.app.board.element.querySelector(
            '[data-row="1"][data-col="0"]',
        ) as HTMLElement;
        expect(firstTile.textContent).toBe("");
    });

    it("surfaces service errors in the status line", async () => {
        const m = await mount();
        for (const c of "zzzzz") m.app.board.type(c);
        await m.app.submitRow();
        const status = m.app.element.querySelector(".status")?.textContent ?? "";
        expect(status).toContain("IllegalGuess");
    });
});
