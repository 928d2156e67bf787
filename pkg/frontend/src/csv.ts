/**
 * Parsers for the CSV/JSON artifacts produced by the simulation CLI.
 *
 * Every CSV starts with a schema comment line `# imbq-csv <kind> v1` and a
 * header row; unknown schema versions are rejected so silent format drift
 * cannot produce wrong figures.  This module never computes mathematics:
 * all numbers are taken verbatim from the artifacts.
 */

export class SchemaError extends Error {}

export interface Table {
  kind: string;
  columns: string[];
  rows: string[][];
}

const SCHEMA_RE = /^# imbq-csv (evolve|norms|bounds) v1$/;

export function parseCsv(text: string): Table {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length < 2) {
    throw new SchemaError("CSV needs a schema line and a header row");
  }
  const match = SCHEMA_RE.exec(lines[0]);
  if (!match) {
    throw new SchemaError(`unrecognized schema line: ${lines[0]}`);
  }
  const columns = lines[1].split(",");
  const rows = lines.slice(2).map((line) => line.split(","));
  for (const row of rows) {
    if (row.length !== columns.length) {
      throw new SchemaError(`row has ${row.length} fields, header has ${columns.length}`);
    }
  }
  return { kind: match[1], columns, rows };
}

export function numericColumn(table: Table, name: string): number[] {
  const index = table.columns.indexOf(name);
  if (index < 0) {
    throw new SchemaError(`missing column '${name}' (have: ${table.columns.join(", ")})`);
  }
  return table.rows.map((row) => {
    const value = Number(row[index]);
    if (Number.isNaN(value)) {
      throw new SchemaError(`non-numeric value '${row[index]}' in column '${name}'`);
    }
    return value;
  });
}

export function stringColumn(table: Table, name: string): string[] {
  const index = table.columns.indexOf(name);
  if (index < 0) {
    throw new SchemaError(`missing column '${name}' (have: ${table.columns.join(", ")})`);
  }
  return table.rows.map((row) => row[index]);
}

export interface FitModel {
  kind: string;
  coefficient: number;
  intercept: number;
  r_squared: number;
  residual_norm: number;
}

export interface FitReport {
  models: FitModel[];
  sandwich: { c_low: number; c_high: number };
}

export function parseFitReport(text: string): FitReport {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch {
    throw new SchemaError("fit report is not valid JSON");
  }
  const report = raw as { schema?: string; models?: FitModel[]; sandwich?: FitReport["sandwich"] };
  if (report.schema !== "imbq-fit v1") {
    throw new SchemaError(`unrecognized fit report schema: ${report.schema}`);
  }
  if (!report.models?.length || !report.sandwich) {
    throw new SchemaError("fit report lacks models or sandwich constants");
  }
  return { models: report.models, sandwich: report.sandwich };
}
