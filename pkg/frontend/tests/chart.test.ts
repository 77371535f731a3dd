import { describe, expect, it } from "vitest";
import { renderSweepChart } from "../src/chart.js";
import { SweepRow } from "../src/csv.js";

function row(threshold: number, on: number, off: number): SweepRow {
  return { threshold, on_topic_accuracy: on, off_topic_accuracy: off };
}

function polylines(svg: string): string[] {
  return [...svg.matchAll(/<polyline points="([^"]*)"/g)].map((m) => m[1]);
}

describe("renderSweepChart", () => {
  it("shows a placeholder when there is nothing to plot", () => {
    const markup = renderSweepChart([]);
    expect(markup).toContain("no data");
    expect(markup).not.toContain("<svg");
  });

  it("draws one polyline per accuracy column", () => {
    const svg = renderSweepChart([row(0.1, 0.95, 0.2), row(0.2, 0.9, 0.5), row(0.3, 0.7, 0.9)]);
    const lines = polylines(svg);
    expect(lines).toHaveLength(2);
    for (const line of lines) {
      expect(line.split(" ")).toHaveLength(3);
    }
    expect(svg).toContain("on_topic_accuracy");
    expect(svg).toContain("off_topic_accuracy");
    expect(svg).toContain("threshold");
  });

  it("stretches a single row into a visible two-point segment", () => {
    const svg = renderSweepChart([row(0.15, 1.0, 0.8)]);
    for (const line of polylines(svg)) {
      const points = line.split(" ");
      expect(points).toHaveLength(2);
      expect(points[0]).not.toBe(points[1]);
    }
  });

  it("maps accuracy onto a fixed vertical axis", () => {
    const top = renderSweepChart([row(0.1, 1.0, 1.0)]);
    const bottom = renderSweepChart([row(0.1, 0.0, 0.0)]);
    const topY = polylines(top)[0].split(" ")[0].split(",")[1];
    const bottomY = polylines(bottom)[0].split(" ")[0].split(",")[1];
    expect(Number(topY)).toBeLessThan(Number(bottomY));
  });
});
