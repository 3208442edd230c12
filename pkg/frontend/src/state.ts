/** Client-side session state.
 *
 * Holds the committed matrix as last confirmed by the service, the raw text
 * of upper-triangle judgments (so "1/6" stays "1/6" on screen), the latest
 * committed results payload, and an optional what-if preview payload. The
 * preview never overwrites committed state; discarding it is a field reset.
 */

import { formatValue, reciprocalDisplay } from "./fractions.js";
import type { ResultsPayload } from "./types.js";

export type Listener = () => void;

export class SessionStore {
  id = "";
  labels: string[] = [];
  /** Committed matrix, row-major, as the service last reported it. */
  matrix: number[][] = [];
  /** Revision of the committed matrix. */
  revision = 0;
  /** Latest committed results payload (never a what-if preview). */
  results: ResultsPayload | null = null;
  /** Active what-if preview payload, if any. */
  preview: ResultsPayload | null = null;
  /** True while a set_comparison request is in flight. */
  pendingMutation = false;

  private cellText = new Map<string, string>();
  private listeners = new Set<Listener>();

  startSession(
    id: string,
    labels: string[],
    matrix: number[][],
    revision: number,
  ): void {
    this.id = id;
    this.labels = labels.slice();
    this.matrix = matrix.map((row) => row.slice());
    this.revision = revision;
    this.results = null;
    this.preview = null;
    this.pendingMutation = false;
    this.cellText.clear();
    this.emit();
  }

  get size(): number {
    return this.labels.length;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  beginMutation(): void {
    this.pendingMutation = true;
    this.emit();
  }

  failMutation(): void {
    this.pendingMutation = false;
    this.emit();
  }

  /** Install a committed results payload (from PUT or GET). Clears any
   * preview: the service answer supersedes speculation. */
  applyCommitted(payload: ResultsPayload): void {
    this.matrix = payload.matrix.map((row) => row.slice());
    this.revision = payload.revision;
    this.results = payload;
    this.preview = null;
    this.pendingMutation = false;
    this.emit();
  }

  setPreview(payload: ResultsPayload): void {
    this.preview = payload;
    this.emit();
  }

  clearPreview(): void {
    if (this.preview === null) return;
    this.preview = null;
    this.emit();
  }

  /** Payload the results panel should render right now. */
  displayed(): ResultsPayload | null {
    return this.preview ?? this.results;
  }

  /** True when the panel shows something older than the committed matrix. */
  isStale(): boolean {
    if (this.pendingMutation) return true;
    return this.results !== null && this.results.revision < this.revision;
  }

  setCellText(i: number, k: number, text: string): void {
    this.cellText.set(`${i}:${k}`, text);
  }

  /** Display text for an editable upper-triangle cell. */
  upperText(i: number, k: number): string {
    return this.cellText.get(`${i}:${k}`) ?? formatValue(this.matrix[i][k]);
  }

  /** Display text for a read-only lower-triangle cell (i > k): the
   * reciprocal of whatever its mirror shows. */
  lowerText(i: number, k: number): string {
    const raw = this.cellText.get(`${k}:${i}`);
    if (raw !== undefined) return reciprocalDisplay(raw);
    return formatValue(this.matrix[i][k]);
  }
}
