/** What-if slider: preview how one judgment change moves the priorities
 * without committing it.
 *
 * Slider positions map exponentially onto [1/9, 9] so equal travel means
 * equal ratio change. Requests are debounced (~150 ms) and a superseded
 * position aborts the request it no longer wants; the committed session is
 * only touched by an explicit apply.
 */

import type { PairrankClient } from "./api.js";
import { debounce, type Debounced } from "./debounce.js";
import { formatValue } from "./fractions.js";
import type { SessionStore } from "./state.js";

const LN9 = Math.log(9);

export interface WhatIfOptions {
  debounceMs?: number;
}

export class WhatIfPanel {
  readonly element: HTMLElement;

  private readonly doc: Document;
  private readonly store: SessionStore;
  private readonly client: PairrankClient;

  private pairSelect!: HTMLSelectElement;
  private slider!: HTMLInputElement;
  private valueLabel!: HTMLElement;
  private banner!: HTMLElement;
  private bannerText!: HTMLElement;

  private controller: AbortController | null = null;
  private seq = 0;
  private lastRequest: Promise<void> = Promise.resolve();
  private readonly requestPreview: Debounced<[]>;

  constructor(
    doc: Document,
    store: SessionStore,
    client: PairrankClient,
    opts: WhatIfOptions = {},
  ) {
    this.doc = doc;
    this.store = store;
    this.client = client;
    this.requestPreview = debounce(() => this.send(), opts.debounceMs ?? 150);
    this.element = this.build();
    this.syncSliderToCommitted();
  }

  private build(): HTMLElement {
    const doc = this.doc;
    const root = doc.createElement("section");
    root.className = "what-if-panel";

    const title = doc.createElement("h2");
    title.textContent = "What if?";
    root.appendChild(title);

    this.pairSelect = doc.createElement("select");
    this.pairSelect.className = "pair-select";
    const n = this.store.size;
    for (let i = 0; i < n; i++) {
      for (let k = i + 1; k < n; k++) {
        const option = doc.createElement("option");
        option.value = `${i},${k}`;
        option.textContent = `${this.store.labels[i]} vs ${this.store.labels[k]}`;
        this.pairSelect.appendChild(option);
      }
    }
    this.pairSelect.addEventListener("change", () => {
      this.discard();
      this.syncSliderToCommitted();
    });
    root.appendChild(this.pairSelect);

    this.slider = doc.createElement("input");
    this.slider.type = "range";
    this.slider.min = "-1";
    this.slider.max = "1";
    this.slider.step = "0.01";
    this.slider.className = "what-if-slider";
    this.slider.addEventListener("input", () => {
      this.updateValueLabel();
      this.requestPreview();
    });
    root.appendChild(this.slider);

    this.valueLabel = doc.createElement("span");
    this.valueLabel.className = "what-if-value";
    root.appendChild(this.valueLabel);

    const apply = doc.createElement("button");
    apply.type = "button";
    apply.className = "what-if-apply";
    apply.textContent = "apply";
    apply.addEventListener("click", () => {
      void this.apply();
    });
    root.appendChild(apply);

    const discard = doc.createElement("button");
    discard.type = "button";
    discard.className = "what-if-discard";
    discard.textContent = "discard";
    discard.addEventListener("click", () => this.discard());
    root.appendChild(discard);

    this.banner = doc.createElement("div");
    this.banner.className = "retry-banner";
    this.banner.hidden = true;
    this.bannerText = doc.createElement("span");
    this.banner.appendChild(this.bannerText);
    const retry = doc.createElement("button");
    retry.type = "button";
    retry.className = "retry";
    retry.textContent = "retry";
    retry.addEventListener("click", () => this.send());
    this.banner.appendChild(retry);
    root.appendChild(this.banner);

    return root;
  }

  pair(): [number, number] {
    const raw = this.pairSelect.value || "0,1";
    const [i, k] = raw.split(",").map(Number);
    return [i, k];
  }

  value(): number {
    return 9 ** Number(this.slider.value);
  }

  selectPair(i: number, k: number): void {
    this.pairSelect.value = `${i},${k}`;
    this.discard();
    this.syncSliderToCommitted();
  }

  /** Move the slider programmatically, as a drag would. */
  slideTo(value: number): void {
    const pos = Math.max(-1, Math.min(1, Math.log(value) / LN9));
    this.slider.value = String(pos);
    this.updateValueLabel();
    this.requestPreview();
  }

  private syncSliderToCommitted(): void {
    const [i, k] = this.pair();
    const committed = this.store.matrix[i]?.[k] ?? 1;
    const pos = Math.max(-1, Math.min(1, Math.log(committed) / LN9));
    this.slider.value = String(pos);
    this.updateValueLabel();
  }

  private updateValueLabel(): void {
    const text = formatValue(this.value());
    this.valueLabel.textContent = text;
    this.element.setAttribute("data-what-if-value", text);
  }

  private send(): void {
    const token = ++this.seq;
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    const [i, k] = this.pair();
    const value = this.value();
    this.lastRequest = this.client
      .whatIf(this.store.id, [{ i, k, value }], controller.signal)
      .then((payload) => {
        if (token !== this.seq) return;
        this.banner.hidden = true;
        this.store.setPreview(payload);
      })
      .catch((err: unknown) => {
        if (token !== this.seq) return;
        if (err instanceof Error && err.name === "AbortError") return;
        this.bannerText.textContent = `preview request failed: ${String(
          err instanceof Error ? err.message : err,
        )}`;
        this.banner.hidden = false;
      });
  }

  /** Resolves once the pending debounce (if any) has fired and its request
   * has settled. Test hook and apply-ordering guard. */
  async settle(): Promise<void> {
    this.requestPreview.flush();
    await this.lastRequest;
  }

  /** Commit the slider value through set_comparison. */
  async apply(): Promise<void> {
    const [i, k] = this.pair();
    const value = this.value();
    this.requestPreview.cancel();
    this.seq++;
    this.controller?.abort();
    this.store.beginMutation();
    try {
      const payload = await this.client.setComparison(this.store.id, i, k, value);
      this.store.setCellText(i, k, formatValue(value));
      this.store.applyCommitted(payload);
      this.banner.hidden = true;
    } catch (err) {
      this.store.failMutation();
      this.bannerText.textContent = `apply failed: ${String(
        err instanceof Error ? err.message : err,
      )}`;
      this.banner.hidden = false;
    }
  }

  /** Drop the preview and any in-flight request; committed state untouched. */
  discard(): void {
    this.requestPreview.cancel();
    this.seq++;
    this.controller?.abort();
    this.controller = null;
    this.banner.hidden = true;
    this.store.clearPreview();
  }
}
