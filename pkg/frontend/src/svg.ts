/** Minimal SVG line-plot emitter; no plotting library, no display. */

import { FigureLayout, Series } from "./figures.js";

const WIDTH = 640;
const HEIGHT = 440;
const MARGIN = { left: 78, right: 24, top: 42, bottom: 54 };
const N_TICKS = 5;

const PLOT_W = WIDTH - MARGIN.left - MARGIN.right;
const PLOT_H = HEIGHT - MARGIN.top - MARGIN.bottom;

function tickText(value: number): string {
  const rounded = Number(value.toPrecision(4));
  return (Object.is(rounded, -0) ? 0 : rounded).toString();
}

function escapeText(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderSvg(layout: FigureLayout): string {
  const [x0, x1] = layout.xRange;
  const [y0, y1] = layout.yRange;
  const sx = (v: number) => MARGIN.left + ((v - x0) / (x1 - x0)) * PLOT_W;
  const sy = (v: number) => MARGIN.top + PLOT_H - ((v - y0) / (y1 - y0)) * PLOT_H;

  const parts: string[] = [
    '<?xml version="1.0" encoding="UTF-8"?>',
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif" font-size="13">`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
    `<text x="${WIDTH / 2}" y="24" text-anchor="middle" font-size="15">` +
      `${escapeText(layout.title)}</text>`,
  ];

  // Frame and ticks.
  const axisBottom = MARGIN.top + PLOT_H;
  const axisRight = MARGIN.left + PLOT_W;
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${PLOT_W}" height="${PLOT_H}" ` +
      'fill="none" stroke="black"/>',
  );
  for (let i = 0; i < N_TICKS; i++) {
    const fx = x0 + (i * (x1 - x0)) / (N_TICKS - 1);
    const px = sx(fx).toFixed(2);
    parts.push(
      `<line x1="${px}" y1="${axisBottom}" x2="${px}" y2="${axisBottom + 6}" stroke="black"/>`,
      `<text x="${px}" y="${axisBottom + 22}" text-anchor="middle">${tickText(fx)}</text>`,
    );
    const fy = y0 + (i * (y1 - y0)) / (N_TICKS - 1);
    const py = sy(fy).toFixed(2);
    parts.push(
      `<line x1="${MARGIN.left - 6}" y1="${py}" x2="${MARGIN.left}" y2="${py}" stroke="black"/>`,
      `<text x="${MARGIN.left - 10}" y="${py}" text-anchor="end" dominant-baseline="middle">` +
        `${tickText(fy)}</text>`,
    );
  }
  parts.push(
    `<text x="${MARGIN.left + PLOT_W / 2}" y="${HEIGHT - 12}" text-anchor="middle">` +
      `${escapeText(layout.xLabel)}</text>`,
    `<text x="20" y="${MARGIN.top + PLOT_H / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 20 ${MARGIN.top + PLOT_H / 2})">${escapeText(layout.yLabel)}</text>`,
  );

  for (const s of layout.series) {
    parts.push(polyline(s, sx, sy));
  }

  // Legend: one sample line per curve, top-right corner of the frame.
  const legendX = axisRight - 150;
  layout.series.forEach((s, i) => {
    const ly = MARGIN.top + 16 + 18 * i;
    const dash = s.dasharray ? ` stroke-dasharray="${s.dasharray}"` : "";
    parts.push(
      `<line x1="${legendX}" y1="${ly}" x2="${legendX + 34}" y2="${ly}" stroke="black"${dash}/>`,
      `<text x="${legendX + 42}" y="${ly}" dominant-baseline="middle">${escapeText(s.label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

function polyline(
  s: Series,
  sx: (v: number) => number,
  sy: (v: number) => number,
): string {
  const coords = s.points
    .map(([x, y]) => `${sx(x).toFixed(2)},${sy(y).toFixed(2)}`)
    .join(" ");
  const dash = s.dasharray ? ` stroke-dasharray="${s.dasharray}"` : "";
  return `<polyline fill="none" stroke="black" stroke-width="1.3"${dash} points="${coords}"/>`;
}
