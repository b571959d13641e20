/** Reader for the sphzeta CLI's CSV tables. */

export interface CsvTable {
  columns: string[];
  rows: number[][];
}

export class CsvError extends Error {}

/**
 * Parse CSV text into a numeric table.
 *
 * Lines starting with '#' are provenance comments; the first remaining
 * line is the header.  Every data cell must parse as a finite number —
 * these tables carry nothing else.
 */
export function parseCsv(text: string): CsvTable {
  const lines = text
    .split(/\r?\n/)
    .filter((ln) => ln.length > 0 && !ln.startsWith("#"));
  if (lines.length === 0) {
    throw new CsvError("empty input: no header line");
  }
  const columns = (lines[0] as string).split(",").map((c) => c.trim());
  if (columns.some((c) => c === "")) {
    throw new CsvError(`malformed header: "${lines[0]}"`);
  }
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = (lines[i] as string).split(",");
    if (cells.length !== columns.length) {
      throw new CsvError(
        `row ${i}: expected ${columns.length} cells, got ${cells.length}`,
      );
    }
    rows.push(
      cells.map((cell) => {
        const value = Number(cell);
        if (cell.trim() === "" || !Number.isFinite(value)) {
          throw new CsvError(`row ${i}: non-numeric cell "${cell}"`);
        }
        return value;
      }),
    );
  }
  if (rows.length === 0) {
    throw new CsvError("empty input: header but no data rows");
  }
  return { columns, rows };
}
