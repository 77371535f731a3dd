"""Generate a synthetic question/statement corpus for the identifier eval.

The generator imitates a reading-comprehension dev split: mostly
'?'-terminated questions, a few questions the first-token rule misses,
and a slice of declaratives that lead with an interrogative word (the
rule's main false-positive source). Output is the {"text","label"} JSON
array the `katecheo eval question-id` command consumes.
"""

import argparse
import json
from pathlib import Path

from katecheo.datagen import question_id_corpus
from katecheo.evaluation import eval_question_id


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--questions", type=int, default=3000)
    parser.add_argument("--statements", type=int, default=3000)
    parser.add_argument("--seed", type=int, default=13)
    parser.add_argument("--out", type=Path, default=Path("question_id_corpus.json"))
    args = parser.parse_args()

    corpus = question_id_corpus(args.questions, args.statements, args.seed)
    args.out.write_text(json.dumps(
        [{"text": item.text, "label": item.label} for item in corpus],
        indent=2, ensure_ascii=False,
    ) + "\n")
    print(f"wrote {len(corpus)} items to {args.out}")

    matrix = eval_question_id(corpus)
    print(f"identifier accuracy on this corpus: {matrix.accuracy:.4f}")
    print(f"question false negative rate:       {matrix.question_false_negative_rate:.4f}")


if __name__ == "__main__":
    main()
