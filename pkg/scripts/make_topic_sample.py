"""Generate a two-topic article sample plus labeled retrieval questions.

Writes, into --out-dir:

* gardening.json / astronomy.json: KB files;
* questions.json: labeled questions (on-topic with target article ids,
  plus off-topic distractors);
* config.json: a ready-to-serve deployment config over the two KBs.

Useful for exercising `katecheo eval search` and `katecheo eval sweep`
at sizes where the outcome is not obvious by inspection.
"""

import argparse
import json
from pathlib import Path

from katecheo.datagen import topic_sample
from katecheo.kb import serialize_kb


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--articles-per-topic", type=int, default=25)
    parser.add_argument("--questions-per-topic", type=int, default=15)
    parser.add_argument("--off-topic-questions", type=int, default=12)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--out-dir", type=Path, default=Path("topic_sample"))
    args = parser.parse_args()

    kbs, questions = topic_sample(args.articles_per_topic, args.questions_per_topic,
                                  args.off_topic_questions, args.seed)
    args.out_dir.mkdir(parents=True, exist_ok=True)

    topics = []
    for kb in kbs:
        name = kb.topic.lower() + ".json"
        (args.out_dir / name).write_bytes(serialize_kb(list(kb.articles)))
        topics.append({"name": kb.topic, "kb_source": name})
        print(f"wrote {len(kb.articles)} articles to {args.out_dir / name}")

    question_rows = [
        {"text": q.text, "expected_topic": q.expected_topic,
         "expected_article_id": q.expected_article_id}
        for q in questions
    ]
    (args.out_dir / "questions.json").write_text(
        json.dumps(question_rows, indent=2, ensure_ascii=False) + "\n")
    print(f"wrote {len(question_rows)} questions to {args.out_dir / 'questions.json'}")

    config = {"topics": topics, "comprehension_mode": "baseline"}
    (args.out_dir / "config.json").write_text(json.dumps(config, indent=2) + "\n")
    print(f"wrote config to {args.out_dir / 'config.json'}")


if __name__ == "__main__":
    main()
