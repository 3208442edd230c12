/** Browser entry point: session setup form plus the app shell. */

import { PairrankClient } from "./api.js";
import { PairrankApp } from "./app.js";

function init(doc: Document): void {
  const form = doc.querySelector<HTMLFormElement>("#session-form");
  const labelsInput = doc.querySelector<HTMLInputElement>("#labels-input");
  const urlInput = doc.querySelector<HTMLInputElement>("#service-url");
  const root = doc.querySelector<HTMLElement>("#app");
  const message = doc.querySelector<HTMLElement>("#setup-message");
  if (!form || !labelsInput || !urlInput || !root) return;

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const labels = labelsInput.value
      .split(",")
      .map((s) => s.trim())
      .filter((s) => s.length > 0);
    const client = new PairrankClient(urlInput.value.trim());
    root.innerHTML = "";
    const app = new PairrankApp(doc, root, client);
    app.start(labels).catch((err: unknown) => {
      if (message) {
        message.textContent = `could not start session: ${String(
          err instanceof Error ? err.message : err,
        )}`;
        message.hidden = false;
      }
    });
  });
}

if (typeof document !== "undefined") {
  init(document);
}
