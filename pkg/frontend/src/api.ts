/** Thin fetch client for the advisor HTTP API.
 *
 * Every method maps to one endpoint; errors carry the service's
 * `detail` string so the UI can surface IllegalGuess / Contradiction /
 * SessionComplete verbatim.
 */

import type {
    CreateSessionResponse,
    FeedbackResponse,
    PolicyInfo,
    SessionView,
    TileColor,
} from "./types.js";

export class ApiError extends Error {
    constructor(
        readonly status: number,
        readonly detail: string,
    ) {
        super(`${status}: ${detail}`);
    }
}

export class AdvisorClient {
    constructor(readonly baseUrl: string) {}

    private async request<T>(path: string, init?: RequestInit): Promise<T> {
        const resp = await fetch(this.baseUrl + path, {
            headers: { "content-type": "application/json" },
            ...init,
        });
        const body = await resp.json();
        if (!resp.ok) {
            throw new ApiError(resp.status, String(body.detail ?? resp.statusText));
        }
        return body as T;
    }

    listPolicies(): Promise<PolicyInfo[]> {
        return this.request("/policies");
    }

    createSession(policyId = "default", seed?: number): Promise<CreateSessionResponse> {
        return this.request("/sessions", {
            method: "POST",
            body: JSON.stringify(
                seed === undefined
                    ? { policy_id: policyId }
                    : { policy_id: policyId, seed },
            ),
        });
    }

    sendFeedback(
        sessionId: string,
        guess: string,
        colors: TileColor[],
    ): Promise<FeedbackResponse> {
        return this.request(`/sessions/${sessionId}/feedback`, {
            method: "POST",
            body: JSON.stringify({ guess, colors }),
        });
    }

    getSession(sessionId: string): Promise<SessionView> {
        return this.request(`/sessions/${sessionId}`);
    }
}
