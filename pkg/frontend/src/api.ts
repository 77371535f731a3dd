export interface StageError {
  stage: string;
  detail: string;
}

export interface PipelineResponse {
  is_question: boolean;
  topic: string | null;
  article_id: string | null;
  article_title: string | null;
  search_score: number | null;
  answer: string | null;
  answer_score: number | null;
  backend: string | null;
  error: StageError | null;
}

export async function askQuestion(question: string): Promise<PipelineResponse> {
  const res = await fetch("/api/v1/qa", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ question }),
  });
  if (!res.ok) {
    throw new Error(`gateway returned HTTP ${res.status}`);
  }
  return res.json();
}
