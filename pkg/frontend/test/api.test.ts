import { afterEach, describe, expect, it, vi } from "vitest";

import { AdvisorClient, ApiError } from "../src/api.js";

function stubFetch(status: number, body: unknown) {
    const calls: { url: string; init?: RequestInit }[] = [];
    vi.stubGlobal("fetch", async (url: string, init?: RequestInit) => {
        calls.push({ url, init });
        return {
            ok: status < 400,
            status,
            statusText: "stub",
            json: async () => body,
        } as Response;
    });
    return calls;
}

afterEach(() => vi.unstubAllGlobals());

describe("AdvisorClient", () => {
    it("creates sessions against the configured base URL", async () => {
        const calls = stubFetch(201, {
            session_id: "s000001",
            recommendation: {
                state: { greens: 0, yellows: 0 },
                action: "probs1",
                word: "bowne",
                candidates_remaining: 2315,
                top_candidates: [],
            },
        });
        const client = new AdvisorClient("http://advisor:9999");
        const resp = await client.createSession("default", 7);
        expect(resp.session_id).toBe("s000001");
        expect(calls[0]?.url).toBe("http://advisor:9999/sessions");
        expect(calls[0]?.init?.method).toBe("POST");
        expect(JSON.parse(String(calls[0]?.init?.body))).toEqual({
            policy_id: "default",
            seed: 7,
        });
    });

    it("omits the seed field when not given", async () => {
        const calls = stubFetch(201, { session_id: "s1", recommendation: null });
        await new AdvisorClient("http://x").createSession();
        expect(JSON.parse(String(calls[0]?.init?.body))).toEqual({
            policy_id: "default",
        });
    });

    it("posts feedback with guess and colors", async () => {
        const calls = stubFetch(200, { won: false });
        await new AdvisorClient("http://x").sendFeedback("s1", "bowne", [
            "gray",
            "gray",
            "gray",
            "gray",
            "green",
        ]);
        expect(calls[0]?.url).toBe("http://x/sessions/s1/feedback");
        const body = JSON.parse(String(calls[0]?.init?.body));
        expect(body.guess).toBe("bowne");
        expect(body.colors).toHaveLength(5);
    });

    it("raises ApiError carrying the service detail", async () => {
        stubFetch(409, { detail: "SessionComplete" });
        const client = new AdvisorClient("http://x");
        await expect(
            client.sendFeedback("s1", "bowne", ["gray", "gray", "gray", "gray", "gray"]),
        ).rejects.toSatisfy((err: unknown) => {
            expect(err).toBeInstanceOf(ApiError);
            expect((err as ApiError).status).toBe(409);
            expect((err as ApiError).detail).toBe("SessionComplete");
            return true;
        });
    });

    it("fetches session state and policies", async () => {
        const calls = stubFetch(200, []);
        const client = new AdvisorClient("http://x");
        await client.getSession("s2");
        await client.listPolicies();
        expect(calls.map((c) => c.url)).toEqual([
            "http://x/sessions/s2",
            "http://x/policies",
        ]);
    });
});
