export interface SweepRow {
  threshold: number;
  on_topic_accuracy: number;
  off_topic_accuracy: number;
}

const HEADER = "threshold,on_topic_accuracy,off_topic_accuracy";

/** Parse the CSV written by the threshold sweep command. Returns an
 * empty list for an empty file; throws on anything malformed. */
export function parseSweepCsv(text: string): SweepRow[] {
  const trimmed = text.trim();
  if (trimmed === "") {
    return [];
  }
  const lines = trimmed.split(/\r?\n/);
  if (lines[0].trim() !== HEADER) {
    throw new Error(`unexpected CSV header: ${lines[0].trim()}`);
  }
  const rows: SweepRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const line = lines[i].trim();
    if (line === "") {
      continue;
    }
    const parts = line.split(",");
    if (parts.length !== 3) {
      throw new Error(`row ${i + 1}: expected 3 fields, got ${parts.length}`);
    }
    const values = parts.map(Number);
    if (values.some((v) => Number.isNaN(v))) {
      throw new Error(`row ${i + 1}: non-numeric field in "${line}"`);
    }
    rows.push({
      threshold: values[0],
      on_topic_accuracy: values[1],
      off_topic_accuracy: values[2],
    });
  }
  return rows;
}
