/**
 * Figure definitions: which CSV schema each figure id expects and how its
 * rows become styled curves.  Pure data transformation — every plotted
 * number comes straight out of the table.
 */

import { CsvTable } from "./csv.js";

export type FigureId = 1 | 3 | 4;

export interface Series {
  label: string;
  /** SVG stroke-dasharray, or null for a full (solid) line. */
  dasharray: string | null;
  points: Array<[number, number]>;
}

export interface FigureLayout {
  title: string;
  xLabel: string;
  yLabel: string;
  xRange: [number, number];
  yRange: [number, number];
  series: Series[];
}

export class FigureError extends Error {}

// Caption line styles: full, dashed, dotted, dot-dash for l = 0/10/20/30.
const L_DASHES = new Map<number, string | null>([
  [0, null],
  [10, "8 4"],
  [20, "1.5 3.5"],
  [30, "8 3 1.5 3"],
]);

interface FigureDef {
  columns: string[];
  title: string;
  xLabel: string;
  yLabel: string;
  /** Minimum x extent; widened if the data goes further. */
  xSpan: [number, number];
  /** Window the y axis must enclose regardless of the data. */
  ySpan?: [number, number];
  build(table: CsvTable): Series[];
}

const DEFS: Record<FigureId, FigureDef> = {
  1: {
    columns: ["e", "E_prolate", "E_oblate"],
    title: "Total zero-point energy vs ellipticity",
    xLabel: "e",
    yLabel: "E * a",
    xSpan: [0, 0.3],
    build: (table) => [
      wideSeries(table, 1, "prolate", null),
      wideSeries(table, 2, "oblate", "8 4"),
    ],
  },
  3: {
    columns: ["gamma2", "l", "ratio"],
    title: "Angular approximation / exact",
    xLabel: "gamma^2",
    yLabel: "ratio",
    xSpan: [0, 1],
    ySpan: [0.99, 1.01],
    build: groupedByL,
  },
  4: {
    columns: ["e", "l", "ratio"],
    title: "Radial approximation / exact",
    xLabel: "e",
    yLabel: "ratio",
    xSpan: [0, 0.3],
    build: groupedByL,
  },
};

export function parseFigureId(raw: string): FigureId {
  const id = Number(raw.replace(/^fig/, ""));
  if (id === 1 || id === 3 || id === 4) {
    return id;
  }
  throw new FigureError(`unknown figure id "${raw}" (expected 1, 3, or 4)`);
}

export function expectedColumns(id: FigureId): string[] {
  return [...DEFS[id].columns];
}

function wideSeries(
  table: CsvTable,
  column: number,
  label: string,
  dasharray: string | null,
): Series {
  const points = table.rows.map(
    (row) => [row[0] as number, row[column] as number] as [number, number],
  );
  return { label, dasharray, points };
}

/** One curve per distinct l value (column 1), x from column 0, y from 2. */
function groupedByL(table: CsvTable): Series[] {
  const groups = new Map<number, Array<[number, number]>>();
  for (const row of table.rows) {
    const l = row[1] as number;
    if (!Number.isInteger(l)) {
      throw new FigureError(`curve label l=${l} is not an integer`);
    }
    let points = groups.get(l);
    if (points === undefined) {
      points = [];
      groups.set(l, points);
    }
    points.push([row[0] as number, row[2] as number]);
  }
  const series: Series[] = [];
  for (const [l, points] of groups) {
    const dasharray = L_DASHES.get(l);
    if (dasharray === undefined) {
      throw new FigureError(
        `no line style for l=${l} (curves are drawn for l = 0, 10, 20, 30)`,
      );
    }
    series.push({ label: `l = ${l}`, dasharray, points });
  }
  return series;
}

export function buildLayout(id: FigureId, table: CsvTable): FigureLayout {
  const def = DEFS[id];
  if (
    table.columns.length !== def.columns.length ||
    table.columns.some((c, i) => c !== def.columns[i])
  ) {
    throw new FigureError(
      `figure ${id} expects columns ${def.columns.join(",")}, ` +
        `got ${table.columns.join(",")}`,
    );
  }
  const series = def.build(table);
  for (const s of series) {
    if (s.points.length < 2) {
      throw new FigureError(
        `curve "${s.label}" has ${s.points.length} point(s); need at least 2`,
      );
    }
  }
  const xs = series.flatMap((s) => s.points.map((p) => p[0]));
  const ys = series.flatMap((s) => s.points.map((p) => p[1]));
  return {
    title: def.title,
    xLabel: def.xLabel,
    yLabel: def.yLabel,
    xRange: [
      Math.min(def.xSpan[0], ...xs),
      Math.max(def.xSpan[1], ...xs),
    ],
    yRange: padded(ys, def.ySpan),
    series,
  };
}

function padded(ys: number[], enclose?: [number, number]): [number, number] {
  let lo = Math.min(...ys);
  let hi = Math.max(...ys);
  if (enclose) {
    lo = Math.min(lo, enclose[0]);
    hi = Math.max(hi, enclose[1]);
  }
  const pad = 0.05 * (hi - lo || Math.abs(hi) || 1);
  return [lo - pad, hi + pad];
}
