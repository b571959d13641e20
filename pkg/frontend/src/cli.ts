/**
 * Command line: figure id + input CSV + output SVG.
 *
 *   sphzeta-figures 3 fig3.csv fig3.svg
 *
 * Exits nonzero on a missing or misshaped CSV; the output file is only
 * written after the whole figure has rendered, so a failed run never
 * leaves an image behind.
 */

import { readFileSync, writeFileSync } from "fs";
import { pathToFileURL } from "url";

import { CsvError, parseCsv } from "./csv.js";
import { FigureError, buildLayout, parseFigureId } from "./figures.js";
import { renderSvg } from "./svg.js";

const USAGE = "usage: sphzeta-figures <1|3|4> <input.csv> <output.svg>";

export function runCli(argv: string[]): number {
  if (argv.length !== 3) {
    console.error(USAGE);
    return 1;
  }
  const [rawId, inputPath, outputPath] = argv as [string, string, string];
  try {
    const id = parseFigureId(rawId);
    const table = parseCsv(readFileSync(inputPath, "utf8"));
    const svg = renderSvg(buildLayout(id, table));
    writeFileSync(outputPath, svg, "utf8");
  } catch (err) {
    if (
      err instanceof CsvError ||
      err instanceof FigureError ||
      (err instanceof Error && "code" in err)
    ) {
      console.error(`sphzeta-figures: ${(err as Error).message}`);
      return 1;
    }
    throw err;
  }
  return 0;
}

if (
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href
) {
  process.exit(runCli(process.argv.slice(2)));
}
