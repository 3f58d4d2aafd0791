/** Wire types for the advisor service, mirrored field by field. */

export type TileColor = "gray" | "yellow" | "green";

export interface StateCounts {
    greens: number;
    yellows: number;
}

export interface Recommendation {
    state: StateCounts;
    action: string | null;
    word: string | null;
    candidates_remaining: number;
    top_candidates: string[];
}

export interface FeedbackResponse extends Recommendation {
    won: boolean;
}

export interface CreateSessionResponse {
    session_id: string;
    recommendation: Recommendation;
}

export interface SessionView {
    session_id: string;
    policy_id: string;
    state: StateCounts;
    history: { guess: string; colors: TileColor[] }[];
    recommendation: Recommendation | null;
    won: boolean;
    created: string;
    updated: string;
}

export interface PolicyInfo {
    policy_id: string;
    n_runs_averaged: number;
}
