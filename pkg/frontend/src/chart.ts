import { SweepRow } from "./csv.js";

const WIDTH = 640;
const HEIGHT = 320;
const PAD = 40;

interface Series {
  label: string;
  color: string;
  pick: (row: SweepRow) => number;
}

const SERIES: Series[] = [
  { label: "on_topic_accuracy", color: "#2563eb", pick: (r) => r.on_topic_accuracy },
  { label: "off_topic_accuracy", color: "#dc2626", pick: (r) => r.off_topic_accuracy },
];

/** Build SVG markup plotting both accuracy curves against threshold.
 * Accuracy is always drawn on a fixed [0, 1] axis so charts from
 * different sweeps are comparable at a glance. */
export function renderSweepChart(rows: SweepRow[]): string {
  if (rows.length === 0) {
    return '<p class="chart-empty">no data</p>';
  }
  // a single row still needs a visible segment
  const data = rows.length === 1 ? [rows[0], rows[0]] : rows;

  const tMin = Math.min(...data.map((r) => r.threshold));
  const tMax = Math.max(...data.map((r) => r.threshold));
  const span = tMax - tMin || 1;
  const x = (t: number) => PAD + ((t - tMin) / span) * (WIDTH - 2 * PAD);
  const y = (v: number) => HEIGHT - PAD - v * (HEIGHT - 2 * PAD);

  const parts: string[] = [];
  parts.push(
    `<svg class="sweep-chart" viewBox="0 0 ${WIDTH} ${HEIGHT}" xmlns="http://www.w3.org/2000/svg">`,
  );
  parts.push(
    `<line x1="${PAD}" y1="${y(0)}" x2="${WIDTH - PAD}" y2="${y(0)}" stroke="#888"/>`,
    `<line x1="${PAD}" y1="${y(0)}" x2="${PAD}" y2="${y(1)}" stroke="#888"/>`,
  );
  for (const v of [0, 0.5, 1]) {
    parts.push(
      `<text x="${PAD - 6}" y="${y(v) + 4}" text-anchor="end" font-size="11">${v.toFixed(1)}</text>`,
    );
  }
  parts.push(
    `<text x="${PAD}" y="${HEIGHT - PAD + 16}" text-anchor="middle" font-size="11">${tMin.toFixed(2)}</text>`,
    `<text x="${WIDTH - PAD}" y="${HEIGHT - PAD + 16}" text-anchor="middle" font-size="11">${tMax.toFixed(2)}</text>`,
    `<text x="${WIDTH / 2}" y="${HEIGHT - 8}" text-anchor="middle" font-size="12">threshold</text>`,
  );

  // with one row both copies share a threshold, so spread them manually
  const xs = rows.length === 1 ? [PAD, WIDTH - PAD] : data.map((r) => x(r.threshold));

  SERIES.forEach((series, i) => {
    const points = data
      .map((r, j) => `${xs[j].toFixed(1)},${y(series.pick(r)).toFixed(1)}`)
      .join(" ");
    parts.push(
      `<polyline points="${points}" fill="none" stroke="${series.color}" stroke-width="2"/>`,
    );
    for (const pair of points.split(" ")) {
      const [px, py] = pair.split(",");
      parts.push(`<circle cx="${px}" cy="${py}" r="3" fill="${series.color}"/>`);
    }
    const ly = PAD + i * 16;
    parts.push(
      `<rect x="${WIDTH - PAD - 150}" y="${ly - 9}" width="10" height="10" fill="${series.color}"/>`,
      `<text x="${WIDTH - PAD - 135}" y="${ly}" font-size="12">${series.label}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("\n");
}
