import { PipelineResponse } from "./api.js";

export type FieldValue = string | number | boolean | null;

export interface StageCard {
  stage: string;
  status: "ok" | "halted";
  lines: { label: string; value: FieldValue }[];
  detail: string | null;
}

/** Map a gateway response onto presentation cards, one per pipeline
 * stage that actually ran. Every value is carried over untouched so
 * the page shows exactly what the gateway said. */
export function toStageCards(response: PipelineResponse): StageCard[] {
  const err = response.error;
  const cards: StageCard[] = [];

  const idHalted = err !== null && err.stage === "question_id";
  cards.push({
    stage: "question_id",
    status: idHalted ? "halted" : "ok",
    lines: [{ label: "is_question", value: response.is_question }],
    detail: idHalted ? err.detail : null,
  });
  if (idHalted) {
    return cards;
  }

  const searchHalted = err !== null && err.stage === "kb_search";
  const searchCard: StageCard = {
    stage: "kb_search",
    status: searchHalted ? "halted" : "ok",
    lines: [],
    detail: searchHalted ? err.detail : null,
  };
  if (!searchHalted) {
    searchCard.lines = [
      { label: "topic", value: response.topic },
      { label: "article_id", value: response.article_id },
      { label: "article_title", value: response.article_title },
      { label: "search_score", value: response.search_score },
    ];
  }
  cards.push(searchCard);
  if (searchHalted) {
    return cards;
  }

  const readerHalted = err !== null && err.stage === "comprehension";
  const readerCard: StageCard = {
    stage: "comprehension",
    status: readerHalted ? "halted" : "ok",
    lines: [],
    detail: readerHalted ? err.detail : null,
  };
  if (!readerHalted) {
    readerCard.lines = [
      { label: "answer", value: response.answer },
      { label: "from article", value: response.article_title },
      { label: "answer_score", value: response.answer_score },
      { label: "backend", value: response.backend },
    ];
  }
  cards.push(readerCard);
  return cards;
}
