/**
 * The three figure kinds rendered from simulation artifacts:
 *
 * - growth_curve:  squared norm vs time on log-log axes with the two
 *   envelope curves c_low*g(t), c_high*g(t) taken from the fit report
 *   (never refitted here: the simulation side is the single source of
 *   numerical truth);
 * - bound_margins: signed margins of every bound check vs time;
 * - energy_drift:  relative energy drift |E(t)-E(0)|/E(0), which an exact
 *   multiplier evolution pins at machine-precision scale.
 *
 * Header-only CSV inputs produce an explicit "no data" placeholder figure.
 */

import { FitReport, numericColumn, parseCsv, parseFitReport, SchemaError, stringColumn, Table } from "./csv";
import { HEIGHT, MARGIN, PALETTE, SvgCanvas, WIDTH, makeScale, placeholder } from "./svg";

export type FigureKind = "growth_curve" | "bound_margins" | "energy_drift";

export interface FigureSpec {
  kind: FigureKind;
  csvText: string;
  fitText?: string;
  title?: string;
}

function regressor(kind: string, t: number): number {
  if (kind === "linear_in_t") {
    return t;
  }
  if (kind === "linear_in_log_t") {
    return Math.log(t);
  }
  return 1;
}

function expectKind(table: Table, kind: string): void {
  if (table.kind !== kind) {
    throw new SchemaError(`figure needs a '${kind}' CSV, got '${table.kind}'`);
  }
}

export function renderGrowthCurve(csvText: string, fitText?: string, title = "Norm growth"): string {
  const table = parseCsv(csvText);
  expectKind(table, "norms");
  if (table.rows.length === 0) {
    return placeholder(title, "no data");
  }
  const allT = numericColumn(table, "t");
  const allV = numericColumn(table, "norm_sq_xi");
  const t: number[] = [];
  const v: number[] = [];
  for (let i = 0; i < allT.length; i++) {
    if (allT[i] > 0 && allV[i] > 0) {
      t.push(allT[i]);
      v.push(allV[i]);
    }
  }
  if (t.length === 0) {
    return placeholder(title, "no data");
  }
  let fit: FitReport | undefined;
  if (fitText !== undefined) {
    fit = parseFitReport(fitText);
  }
  const vLo = Math.min(...v);
  const vHi = Math.max(...v);
  const x = makeScale(t[0], t[t.length - 1], MARGIN.left, WIDTH - MARGIN.right, true);
  const y = makeScale(vLo / 2, vHi * 2, HEIGHT - MARGIN.bottom, MARGIN.top, true);
  const canvas = new SvgCanvas(title);
  canvas.axes(x, y, "t", "squared norm (frequency side)");
  const legend: Array<{ label: string; color: string; dashed?: boolean }> = [
    { label: "data", color: PALETTE[0] },
  ];
  if (fit) {
    const best = fit.models[0];
    const low = t.map((ti) => fit!.sandwich.c_low * regressor(best.kind, ti));
    const high = t.map((ti) => fit!.sandwich.c_high * regressor(best.kind, ti));
    const clamp = (arr: number[]) => arr.map((vi) => Math.min(Math.max(vi, y.lo), y.hi));
    canvas.polyline(t.map(x), clamp(low).map(y), PALETTE[1], true);
    canvas.polyline(t.map(x), clamp(high).map(y), PALETTE[2], true);
    legend.push(
      { label: `lower envelope (${best.kind})`, color: PALETTE[1], dashed: true },
      { label: `upper envelope (${best.kind})`, color: PALETTE[2], dashed: true },
    );
  }
  canvas.polyline(t.map(x), v.map(y), PALETTE[0]);
  for (let i = 0; i < t.length; i++) {
    canvas.circle(x(t[i]), y(v[i]), PALETTE[0], 2);
  }
  canvas.legend(legend);
  return canvas.render();
}

export function renderBoundMargins(csvText: string, title = "Bound-check margins"): string {
  const table = parseCsv(csvText);
  expectKind(table, "bounds");
  if (table.rows.length === 0) {
    return placeholder(title, "no data");
  }
  const names = stringColumn(table, "name");
  const t = numericColumn(table, "t");
  const margin = numericColumn(table, "margin");
  // symmetric log-like compression keeps wildly different margins visible
  const squash = (m: number) => Math.sign(m) * Math.log10(1 + Math.abs(m));
  const squashed = margin.map(squash);
  const tLo = Math.min(...t);
  const tHi = Math.max(...t);
  const sLo = Math.min(...squashed, 0);
  const sHi = Math.max(...squashed, 1);
  const x = makeScale(tLo, tHi, MARGIN.left, WIDTH - MARGIN.right, true);
  const y = makeScale(sLo - 0.5, sHi + 0.5, HEIGHT - MARGIN.bottom, MARGIN.top, false);
  const canvas = new SvgCanvas(title);
  canvas.axes(x, y, "t", "sign(margin) * log10(1+|margin|)");
  canvas.line(MARGIN.left, y(0), WIDTH - MARGIN.right, y(0), "#d62728", 1);
  const seriesNames: string[] = [];
  for (const name of names) {
    if (!seriesNames.includes(name)) {
      seriesNames.push(name);
    }
  }
  const legend: Array<{ label: string; color: string }> = [];
  seriesNames.forEach((name, idx) => {
    const color = PALETTE[idx % PALETTE.length];
    const xs: number[] = [];
    const ys: number[] = [];
    for (let i = 0; i < names.length; i++) {
      if (names[i] === name) {
        xs.push(x(t[i]));
        ys.push(y(squashed[i]));
      }
    }
    for (let i = 0; i < xs.length; i++) {
      canvas.circle(xs[i], ys[i], color, 2.5);
    }
    if (xs.length > 1) {
      canvas.polyline(xs, ys, color, false, 0.75);
    }
    if (legend.length < 12) {
      legend.push({ label: name, color });
    }
  });
  canvas.legend(legend);
  return canvas.render();
}

export function renderEnergyDrift(csvText: string, title = "Relative energy drift"): string {
  const table = parseCsv(csvText);
  expectKind(table, "evolve");
  if (table.rows.length === 0) {
    return placeholder(title, "no data");
  }
  const t = numericColumn(table, "t");
  const total = numericColumn(table, "energy_total");
  const base = total[0];
  const floor = 1e-18;
  const drift = total.map((e) => Math.max(Math.abs(e - base) / Math.max(base, floor), floor));
  const positive = t.map((ti) => Math.max(ti, floor));
  const x = makeScale(Math.max(Math.min(...positive.slice(1)), floor), Math.max(...t, 1), MARGIN.left, WIDTH - MARGIN.right, true);
  const y = makeScale(floor, 1e-8, HEIGHT - MARGIN.bottom, MARGIN.top, true);
  const canvas = new SvgCanvas(title);
  canvas.axes(x, y, "t", "|E(t)-E(0)| / E(0)");
  const xs: number[] = [];
  const ys: number[] = [];
  for (let i = 1; i < t.length; i++) {
    xs.push(x(positive[i]));
    ys.push(y(Math.min(Math.max(drift[i], y.lo), y.hi)));
  }
  if (xs.length > 0) {
    canvas.polyline(xs, ys, PALETTE[0]);
    for (let i = 0; i < xs.length; i++) {
      canvas.circle(xs[i], ys[i], PALETTE[0], 2);
    }
  }
  canvas.legend([{ label: "relative drift (floored at 1e-18)", color: PALETTE[0] }]);
  return canvas.render();
}

export function render(spec: FigureSpec): string {
  switch (spec.kind) {
    case "growth_curve":
      return renderGrowthCurve(spec.csvText, spec.fitText, spec.title ?? "Norm growth");
    case "bound_margins":
      return renderBoundMargins(spec.csvText, spec.title ?? "Bound-check margins");
    case "energy_drift":
      return renderEnergyDrift(spec.csvText, spec.title ?? "Relative energy drift");
    default:
      throw new SchemaError(`unknown figure kind '${(spec as { kind: string }).kind}'`);
  }
}
