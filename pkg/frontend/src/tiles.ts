/** Pure board state: 6 rows of 5 tiles, tap-cycled colors. */

import type { TileColor } from "./types.js";

export const ROWS = 6;
export const COLS = 5;

const CYCLE: TileColor[] = ["gray", "yellow", "green"];

export function nextColor(color: TileColor): TileColor {
    const i = CYCLE.indexOf(color);
    return CYCLE[(i + 1) % CYCLE.length] as TileColor;
}

export interface RowState {
    letters: string; // 0..5 lowercase letters
    colors: TileColor[]; // always length 5
}

export function emptyRow(): RowState {
    return { letters: "", colors: Array(COLS).fill("gray") };
}

export function emptyBoard(): RowState[] {
    return Array.from({ length: ROWS }, emptyRow);
}

export function isCompleteGuess(row: RowState): boolean {
    return /^[a-z]{5}$/.test(row.letters);
}

export function allGreen(row: RowState): boolean {
    return row.colors.every((c) => c === "green");
}

/** Type a letter into the row; ignored once 5 letters are present. */
export function typeLetter(row: RowState, letter: string): RowState {
    const c = letter.toLowerCase();
    if (!/^[a-z]$/.test(c) || row.letters.length >= COLS) return row;
    return { ...row, letters: row.letters + c };
}

export function eraseLetter(row: RowState): RowState {
    return { ...row, letters: row.letters.slice(0, -1) };
}

export function cycleTile(row: RowState, col: number): RowState {
    if (col < 0 || col >= COLS) return row;
    const colors = row.colors.slice();
    colors[col] = nextColor(colors[col] as TileColor);
    return { ...row, colors };
}
