/** Comparison matrix editor grid.
 *
 * Upper-triangle cells are text inputs (decimal or fraction); the diagonal
 * is fixed at 1 and the lower triangle renders read-only reciprocals. A bad
 * entry shows an inline message and sends nothing.
 */

import { JudgmentError, parseJudgment } from "./fractions.js";
import type { SessionStore } from "./state.js";

export type CommitHandler = (
  i: number,
  k: number,
  value: number,
  text: string,
) => void;

export function renderMatrixEditor(
  doc: Document,
  store: SessionStore,
  onCommit: CommitHandler,
): HTMLElement {
  const container = doc.createElement("div");
  container.className = "matrix-editor";

  const table = doc.createElement("table");
  const head = doc.createElement("tr");
  head.appendChild(doc.createElement("th"));
  for (const label of store.labels) {
    const th = doc.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }
  table.appendChild(head);

  const errorBox = doc.createElement("div");
  errorBox.className = "editor-error";
  errorBox.setAttribute("role", "alert");
  errorBox.hidden = true;

  const showError = (message: string) => {
    errorBox.textContent = message;
    errorBox.hidden = false;
  };
  const clearError = () => {
    errorBox.textContent = "";
    errorBox.hidden = true;
  };

  const n = store.size;
  for (let i = 0; i < n; i++) {
    const row = doc.createElement("tr");
    const rowHead = doc.createElement("th");
    rowHead.textContent = store.labels[i];
    row.appendChild(rowHead);
    for (let k = 0; k < n; k++) {
      const cell = doc.createElement("td");
      if (i === k) {
        cell.textContent = "1";
        cell.className = "diagonal";
      } else if (i < k) {
        const input = doc.createElement("input");
        input.type = "text";
        input.value = store.upperText(i, k);
        input.setAttribute("data-cell", `${i},${k}`);
        input.addEventListener("change", () => {
          let value: number;
          try {
            value = parseJudgment(input.value);
          } catch (err) {
            if (err instanceof JudgmentError) {
              input.classList.add("invalid");
              showError(`(${store.labels[i]}, ${store.labels[k]}): ${err.message}`);
              return;
            }
            throw err;
          }
          input.classList.remove("invalid");
          clearError();
          onCommit(i, k, value, input.value.trim());
        });
        cell.appendChild(input);
      } else {
        cell.textContent = store.lowerText(i, k);
        cell.className = "mirror";
        cell.setAttribute("data-mirror", `${i},${k}`);
      }
      row.appendChild(cell);
    }
    table.appendChild(row);
  }

  container.appendChild(table);
  container.appendChild(errorBox);
  return container;
}
