/**
 * Figure-rendering CLI.
 *
 * Usage:
 *   node dist/src/main.js <growth_curve|bound_margins|energy_drift> \
 *     --input <artifact.csv> [--fit <fit.json>] [--title <text>] --out <figure.svg>
 *
 * Exit codes: 0 success (including the "no data" placeholder for
 * header-only CSV inputs), 1 schema mismatch or missing columns,
 * 2 bad invocation.
 */

import { readFileSync, writeFileSync } from "fs";

import { SchemaError } from "./csv";
import { FigureKind, render } from "./figures";

const KINDS: FigureKind[] = ["growth_curve", "bound_margins", "energy_drift"];

function parseArgs(argv: string[]): { kind: FigureKind; input: string; fit?: string; out: string; title?: string } {
  const [kind, ...rest] = argv;
  if (!KINDS.includes(kind as FigureKind)) {
    throw new Error(`first argument must be one of ${KINDS.join(", ")}`);
  }
  const flags: Record<string, string> = {};
  for (let i = 0; i < rest.length; i += 2) {
    const key = rest[i];
    const value = rest[i + 1];
    if (!key?.startsWith("--") || value === undefined) {
      throw new Error(`malformed flag pair near '${key}'`);
    }
    flags[key.slice(2)] = value;
  }
  if (!flags.input || !flags.out) {
    throw new Error("--input and --out are required");
  }
  return { kind: kind as FigureKind, input: flags.input, fit: flags.fit, out: flags.out, title: flags.title };
}

export function main(argv: string[]): number {
  let args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`usage error: ${(err as Error).message}`);
    return 2;
  }
  try {
    const csvText = readFileSync(args.input, "utf8");
    const fitText = args.fit === undefined ? undefined : readFileSync(args.fit, "utf8");
    const svg = render({ kind: args.kind, csvText, fitText, title: args.title });
    writeFileSync(args.out, svg);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
      return 1;
    }
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
