/** Results panel: horizontal priority bars with one-sigma whiskers, a
 * GMM/EM/both toggle, indistinguishability badges, and staleness marking.
 *
 * Every number rendered here came out of a service payload untouched; the
 * panel does layout, not math.
 */

import type { SessionStore } from "./state.js";
import type { Method, MethodBlockDto, MethodView, ResultsPayload } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const LEFT_GUTTER = 130;
const BAR_AREA = 280;
const VALUE_X = LEFT_GUTTER + BAR_AREA + 12;
const WIDTH = VALUE_X + 150;
const BAR_HEIGHT = 10;
const BAR_GAP = 4;
const ROW_PAD = 8;

function methodsFor(view: MethodView, payload: ResultsPayload): Method[] {
  const available: Method[] = [];
  if (payload.results.gmm) available.push("gmm");
  if (payload.results.em) available.push("em");
  if (view === "both") return available;
  return available.filter((m) => m === view);
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  doc: Document,
  tag: K,
): SVGElementTagNameMap[K] {
  return doc.createElementNS(SVG_NS, tag);
}

function buildChart(
  doc: Document,
  payload: ResultsPayload,
  methods: Method[],
): SVGSVGElement {
  const n = payload.labels.length;
  const perRow = methods.length * (BAR_HEIGHT + BAR_GAP) - BAR_GAP;
  const rowHeight = perRow + 2 * ROW_PAD;
  const height = n * rowHeight;

  const svg = svgEl(doc, "svg");
  svg.setAttribute("width", String(WIDTH));
  svg.setAttribute("height", String(height));
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${height}`);
  svg.setAttribute("class", "priority-chart");

  let maxSpan = 0;
  for (const m of methods) {
    const block = payload.results[m] as MethodBlockDto;
    const { omega, domega } = block.estimate;
    for (let e = 0; e < n; e++) {
      maxSpan = Math.max(maxSpan, omega[e] + domega[e]);
    }
  }
  const scale = BAR_AREA / Math.max(maxSpan, 1e-12);

  for (let e = 0; e < n; e++) {
    const rowTop = e * rowHeight;

    const label = svgEl(doc, "text");
    label.setAttribute("x", "4");
    label.setAttribute("y", String(rowTop + rowHeight / 2 + 4));
    label.setAttribute("class", "element-label");
    label.textContent = payload.labels[e];
    svg.appendChild(label);

    methods.forEach((m, slot) => {
      const block = payload.results[m] as MethodBlockDto;
      const omega = block.estimate.omega[e];
      const domega = block.estimate.domega[e];
      const y = rowTop + ROW_PAD + slot * (BAR_HEIGHT + BAR_GAP);
      const mid = y + BAR_HEIGHT / 2;

      const bar = svgEl(doc, "rect");
      bar.setAttribute("x", String(LEFT_GUTTER));
      bar.setAttribute("y", String(y));
      bar.setAttribute("width", String(Math.max(omega, 0) * scale));
      bar.setAttribute("height", String(BAR_HEIGHT));
      bar.setAttribute("class", `bar ${m}`);
      bar.setAttribute("data-method", m);
      bar.setAttribute("data-element", String(e));
      svg.appendChild(bar);

      const lo = LEFT_GUTTER + Math.max(omega - domega, 0) * scale;
      const hi = LEFT_GUTTER + (omega + domega) * scale;
      const whisker = svgEl(doc, "line");
      whisker.setAttribute("x1", String(lo));
      whisker.setAttribute("x2", String(hi));
      whisker.setAttribute("y1", String(mid));
      whisker.setAttribute("y2", String(mid));
      whisker.setAttribute("class", `whisker ${m}`);
      whisker.setAttribute("data-method", m);
      whisker.setAttribute("data-element", String(e));
      svg.appendChild(whisker);
      for (const x of [lo, hi]) {
        const cap = svgEl(doc, "line");
        cap.setAttribute("x1", String(x));
        cap.setAttribute("x2", String(x));
        cap.setAttribute("y1", String(mid - 4));
        cap.setAttribute("y2", String(mid + 4));
        cap.setAttribute("class", `whisker-cap ${m}`);
        svg.appendChild(cap);
      }

      const value = svgEl(doc, "text");
      value.setAttribute("x", String(VALUE_X));
      value.setAttribute("y", String(mid + 4));
      value.setAttribute("class", `value-label ${m}`);
      value.setAttribute("data-method", m);
      value.setAttribute("data-element", String(e));
      value.textContent = `${omega.toFixed(3)} ± ${domega.toFixed(3)}`;
      svg.appendChild(value);
    });
  }
  return svg;
}

function buildBadges(
  doc: Document,
  payload: ResultsPayload,
  methods: Method[],
): HTMLElement {
  const box = doc.createElement("div");
  box.className = "badges";
  let count = 0;
  for (const m of methods) {
    const block = payload.results[m] as MethodBlockDto;
    for (const pair of block.ranking.warnings) {
      const [i, k] = pair;
      const badge = doc.createElement("span");
      badge.className = "badge indistinguishable";
      badge.setAttribute("data-method", m);
      badge.setAttribute("data-pair", `${i},${k}`);
      badge.textContent = `${payload.labels[i]} ↔ ${payload.labels[k]}`;
      badge.title =
        `${m}: intervals overlap at sigma ${block.ranking.sigma}; ` +
        "this pairwise ranking is not reliable";
      box.appendChild(badge);
      count += 1;
    }
  }
  if (count === 0) {
    const note = doc.createElement("span");
    note.className = "no-badges";
    note.textContent = "all pairwise rankings supported";
    box.appendChild(note);
  }
  return box;
}

export function renderResultsPanel(
  doc: Document,
  store: SessionStore,
  view: MethodView,
  onViewChange: (view: MethodView) => void,
): HTMLElement {
  const panel = doc.createElement("section");
  panel.className = "results-panel";

  const header = doc.createElement("div");
  header.className = "panel-header";
  const title = doc.createElement("h2");
  title.textContent = "Priorities";
  header.appendChild(title);

  for (const v of ["gmm", "em", "both"] as const) {
    const button = doc.createElement("button");
    button.type = "button";
    button.className = "view-toggle";
    button.setAttribute("data-view", v);
    button.setAttribute("aria-pressed", v === view ? "true" : "false");
    button.textContent = v;
    button.addEventListener("click", () => onViewChange(v));
    header.appendChild(button);
  }

  const payload = store.displayed();

  if (payload?.what_if) {
    const preview = doc.createElement("span");
    preview.className = "preview-indicator";
    preview.textContent = "what-if preview";
    header.appendChild(preview);
  } else if (store.isStale()) {
    const stale = doc.createElement("span");
    stale.className = "stale-indicator";
    const shown = store.results === null ? "none" : String(store.results.revision);
    stale.textContent = `stale: showing revision ${shown}, editor at ${store.revision}`;
    header.appendChild(stale);
  }

  panel.appendChild(header);

  if (payload === null) {
    const empty = doc.createElement("p");
    empty.className = "empty-note";
    empty.textContent = "no results yet";
    panel.appendChild(empty);
    return panel;
  }

  panel.setAttribute("data-revision", String(payload.revision));
  const methods = methodsFor(view, payload);
  panel.appendChild(buildChart(doc, payload, methods));
  panel.appendChild(buildBadges(doc, payload, methods));
  return panel;
}
