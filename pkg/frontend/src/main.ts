import { askQuestion, PipelineResponse } from "./api.js";
import { toStageCards, StageCard } from "./render.js";
import { parseSweepCsv } from "./csv.js";
import { renderSweepChart } from "./chart.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function cardNode(card: StageCard): HTMLElement {
  const box = el("div", `card card-${card.status}`);
  box.appendChild(el("div", "card-stage", `${card.stage} [${card.status}]`));
  for (const line of card.lines) {
    const row = el("div", "card-line");
    row.appendChild(el("span", "card-label", line.label));
    row.appendChild(el("span", "card-value", String(line.value)));
    box.appendChild(row);
  }
  if (card.detail !== null) {
    box.appendChild(el("div", "card-detail", card.detail));
  }
  return box;
}

function historyEntry(question: string, response: PipelineResponse): HTMLElement {
  const entry = el("div", "entry");
  entry.appendChild(el("div", "entry-question", question));
  const cards = el("div", "entry-cards");
  for (const card of toStageCards(response)) {
    cards.appendChild(cardNode(card));
  }
  entry.appendChild(cards);
  return entry;
}

function main(): void {
  const form = document.getElementById("ask-form") as HTMLFormElement;
  const input = document.getElementById("question") as HTMLInputElement;
  const button = document.getElementById("ask-button") as HTMLButtonElement;
  const banner = document.getElementById("banner") as HTMLDivElement;
  const history = document.getElementById("history") as HTMLDivElement;
  const csvInput = document.getElementById("sweep-file") as HTMLInputElement;
  const chartHost = document.getElementById("chart") as HTMLDivElement;

  let pending = false;

  form.addEventListener("submit", async (event) => {
    event.preventDefault();
    const question = input.value.trim();
    if (question === "" || pending) return;

    pending = true;
    button.disabled = true;
    banner.hidden = true;
    try {
      const response = await askQuestion(question);
      history.prepend(historyEntry(question, response));
      input.value = "";
    } catch (err) {
      banner.textContent = `request failed: ${err instanceof Error ? err.message : err}`;
      banner.hidden = false;
    } finally {
      pending = false;
      button.disabled = false;
    }
  });

  csvInput.addEventListener("change", async () => {
    const file = csvInput.files?.[0];
    if (!file) return;
    try {
      const rows = parseSweepCsv(await file.text());
      chartHost.innerHTML = renderSweepChart(rows);
    } catch (err) {
      chartHost.innerHTML = "";
      chartHost.appendChild(
        el("p", "chart-error", `could not parse CSV: ${err instanceof Error ? err.message : err}`),
      );
    }
  });
}

main();
