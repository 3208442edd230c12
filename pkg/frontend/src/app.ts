/** Wires the store, editor, results panel, and what-if panel together.
 *
 * Mutations are serialized: at most one set_comparison is in flight, later
 * edits queue behind it. The editor and chart re-render on every store
 * change; the what-if panel keeps its own element so slider state survives.
 */

import type { PairrankClient } from "./api.js";
import { renderMatrixEditor } from "./editor.js";
import { renderResultsPanel } from "./panel.js";
import { SessionStore } from "./state.js";
import type { MethodView } from "./types.js";
import { WhatIfPanel } from "./whatif.js";

export class PairrankApp {
  readonly store = new SessionStore();
  view: MethodView = "gmm";
  whatIf: WhatIfPanel | null = null;

  private readonly doc: Document;
  private readonly root: HTMLElement;
  private readonly client: PairrankClient;
  private mutations: Promise<void> = Promise.resolve();
  private editorSlot: HTMLElement;
  private panelSlot: HTMLElement;
  private whatIfSlot: HTMLElement;
  private errorBanner: HTMLElement;

  constructor(doc: Document, root: HTMLElement, client: PairrankClient) {
    this.doc = doc;
    this.root = root;
    this.client = client;
    this.editorSlot = doc.createElement("div");
    this.panelSlot = doc.createElement("div");
    this.whatIfSlot = doc.createElement("div");
    this.errorBanner = doc.createElement("div");
    this.errorBanner.className = "app-error";
    this.errorBanner.hidden = true;
    root.append(this.errorBanner, this.editorSlot, this.panelSlot, this.whatIfSlot);
    this.store.subscribe(() => this.render());
  }

  async start(labels: string[]): Promise<void> {
    const created = await this.client.createSession(labels);
    const state = await this.client.getSession(created.id);
    this.store.startSession(state.id, state.labels, state.matrix, state.revision);
    const results = await this.client.getResults(state.id);
    this.store.applyCommitted(results);
    this.whatIfSlot.innerHTML = "";
    this.whatIf = new WhatIfPanel(this.doc, this.store, this.client);
    this.whatIfSlot.appendChild(this.whatIf.element);
  }

  /** Editor commit path; chains so only one mutation is ever in flight. */
  commitJudgment(i: number, k: number, value: number, text: string): Promise<void> {
    const run = async () => {
      this.store.setCellText(i, k, text);
      this.store.beginMutation();
      try {
        const payload = await this.client.setComparison(this.store.id, i, k, value);
        this.store.applyCommitted(payload);
        this.errorBanner.hidden = true;
      } catch (err) {
        this.store.failMutation();
        this.errorBanner.textContent = `update failed: ${String(
          err instanceof Error ? err.message : err,
        )}`;
        this.errorBanner.hidden = false;
      }
    };
    this.mutations = this.mutations.then(run);
    return this.mutations;
  }

  /** Resolves when queued mutations and any pending what-if have settled. */
  async whenIdle(): Promise<void> {
    await this.mutations;
    await this.whatIf?.settle();
  }

  private render(): void {
    this.editorSlot.innerHTML = "";
    if (this.store.size > 0) {
      this.editorSlot.appendChild(
        renderMatrixEditor(this.doc, this.store, (i, k, value, text) => {
          void this.commitJudgment(i, k, value, text);
        }),
      );
    }
    this.panelSlot.innerHTML = "";
    this.panelSlot.appendChild(
      renderResultsPanel(this.doc, this.store, this.view, (view) => {
        this.view = view;
        this.render();
      }),
    );
  }
}
