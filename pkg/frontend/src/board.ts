/** 6x5 feedback grid.
 *
 * The player types the word they actually guessed into the active row
 * and taps each tile to cycle gray -> yellow -> green, reproducing the
 * colors the game showed.  Submitted rows are frozen; the next row
 * becomes active.
 */

import {
    COLS,
    ROWS,
    RowState,
    cycleTile,
    emptyBoard,
    eraseLetter,
    typeLetter,
} from "./tiles.js";

export class BoardView {
    readonly element: HTMLElement;
    private rows: RowState[] = emptyBoard();
    private active = 0;
    private locked = false;

    constructor(doc: Document = document) {
        this.element = doc.createElement("div");
        this.element.className = "board";
        this.element.addEventListener("click", (ev) => {
            const target = ev.target as HTMLElement;
            if (target.dataset.row === undefined) return;
            const row = Number(target.dataset.row);
            const col = Number(target.dataset.col);
            if (row !== this.active || this.locked) return;
            this.rows[row] = cycleTile(this.rows[row] as RowState, col);
            this.render();
        });
        this.render();
    }

    type(letter: string): void {
        if (this.locked) return;
        this.rows[this.active] = typeLetter(this.rows[this.active] as RowState, letter);
        this.render();
    }

    erase(): void {
        if (this.locked) return;
        this.rows[this.active] = eraseLetter(this.rows[this.active] as RowState);
        this.render();
    }

    currentRow(): RowState {
        return this.rows[this.active] as RowState;
    }

    /** Freeze the active row and move on; no-op past the last row. */
    commitRow(): void {
        if (this.active < ROWS - 1) {
            this.active += 1;
        } else {
            this.locked = true;
        }
        this.render();
    }

    lock(): void {
        this.locked = true;
        this.render();
    }

    reset(): void {
        this.rows = emptyBoard();
        this.active = 0;
        this.locked = false;
        this.render();
    }

    private render(): void {
        this.element.textContent = "";
        const doc = this.element.ownerDocument;
        this.rows.forEach((row, r) => {
            const rowEl = doc.createElement("div");
            rowEl.className = "row" + (r === this.active && !this.locked ? " active" : "");
            for (let c = 0; c < COLS; c++) {
                const tile = doc.createElement("div");
                tile.className = "tile";
                tile.dataset.row = String(r);
                tile.dataset.col = String(c);
                tile.dataset.color = row.colors[c] as string;
                tile.textContent = row.letters[c] ?? "";
                rowEl.appendChild(tile);
            }
            this.element.appendChild(rowEl);
        });
    }
}
