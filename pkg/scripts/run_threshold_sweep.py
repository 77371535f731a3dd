"""Sweep the off-topic threshold over the synthetic sample, both strategies.

Generates the deterministic two-topic sample in memory, runs the sweep
for combined and segmented search, writes one CSV per strategy, and
prints a side-by-side table to pick an operating point from.
"""

import argparse
from pathlib import Path

from katecheo.datagen import topic_sample
from katecheo.evaluation import threshold_sweep, write_sweep_csv


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="start", type=float, default=0.10)
    parser.add_argument("--to", dest="stop", type=float, default=0.30)
    parser.add_argument("--step", type=float, default=0.01)
    parser.add_argument("--articles-per-topic", type=int, default=25)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--out-dir", type=Path, default=Path("."))
    args = parser.parse_args()

    kbs, questions = topic_sample(articles_per_topic=args.articles_per_topic,
                                  seed=args.seed)
    results = {}
    for strategy in ("combined", "segmented"):
        rows = threshold_sweep(questions, kbs, strategy,
                               args.start, args.stop, args.step)
        out = args.out_dir / f"sweep_{strategy}.csv"
        write_sweep_csv(rows, out)
        results[strategy] = rows
        print(f"wrote {len(rows)} rows to {out}")

    print()
    print("threshold  combined on/off    segmented on/off")
    for row_c, row_s in zip(results["combined"], results["segmented"]):
        print(f"  {row_c.threshold:.2f}     {row_c.on_topic_accuracy:.4f} / "
              f"{row_c.off_topic_accuracy:.4f}    {row_s.on_topic_accuracy:.4f} / "
              f"{row_s.off_topic_accuracy:.4f}")


if __name__ == "__main__":
    main()
