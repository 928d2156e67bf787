/**
 * Minimal deterministic SVG plotting: fixed canvas, fixed styling, fixed
 * number formatting.  Rendering the same data twice yields identical bytes.
 */

export const WIDTH = 900;
export const HEIGHT = 560;
export const MARGIN = { left: 80, right: 30, top: 40, bottom: 55 };

export const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
  "#17becf",
];

export function fmt(value: number): string {
  if (!Number.isFinite(value)) {
    return "0";
  }
  return Number(value.toPrecision(8)).toString();
}

export interface Scale {
  (value: number): number;
  readonly lo: number;
  readonly hi: number;
  readonly log: boolean;
}

export function makeScale(lo: number, hi: number, outLo: number, outHi: number, log: boolean): Scale {
  const a = log ? Math.log10(lo) : lo;
  const b = log ? Math.log10(hi) : hi;
  const span = b === a ? 1 : b - a;
  const scale = (value: number): number => {
    const v = log ? Math.log10(value) : value;
    return outLo + ((v - a) / span) * (outHi - outLo);
  };
  return Object.assign(scale, { lo, hi, log });
}

export function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let p = Math.ceil(Math.log10(lo)); p <= Math.floor(Math.log10(hi)); p++) {
    ticks.push(Math.pow(10, p));
  }
  return ticks;
}

export function linearTicks(lo: number, hi: number, count = 6): number[] {
  const span = hi - lo || 1;
  const step = Math.pow(10, Math.floor(Math.log10(span / count)));
  const mult = span / count / step >= 5 ? 5 : span / count / step >= 2 ? 2 : 1;
  const inc = mult * step;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / inc) * inc; v <= hi + 1e-12 * span; v += inc) {
    ticks.push(v);
  }
  return ticks;
}

export function tickLabel(value: number, log: boolean): string {
  if (log) {
    const p = Math.round(Math.log10(value));
    return `1e${p}`;
  }
  return fmt(value);
}

export class SvgCanvas {
  private parts: string[] = [];

  constructor(title: string) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="Helvetica,Arial,sans-serif">`,
      `<rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>`,
      `<text x="${WIDTH / 2}" y="24" text-anchor="middle" font-size="16">${escapeXml(title)}</text>`,
    );
  }

  polyline(xs: number[], ys: number[], color: string, dashed = false, width = 1.5): void {
    const points = xs.map((x, i) => `${fmt(x)},${fmt(ys[i])}`).join(" ");
    const dash = dashed ? ` stroke-dasharray="6,4"` : "";
    this.parts.push(
      `<polyline fill="none" stroke="${color}" stroke-width="${width}"${dash} points="${points}"/>`,
    );
  }

  circle(x: number, y: number, color: string, r = 2.5): void {
    this.parts.push(`<circle cx="${fmt(x)}" cy="${fmt(y)}" r="${r}" fill="${color}"/>`);
  }

  text(x: number, y: number, content: string, size = 12, anchor = "middle", color = "#000000"): void {
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}" text-anchor="${anchor}" font-size="${size}" fill="${color}">${escapeXml(content)}</text>`,
    );
  }

  line(x1: number, y1: number, x2: number, y2: number, color = "#cccccc", width = 1): void {
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="${color}" stroke-width="${width}"/>`,
    );
  }

  axes(x: Scale, y: Scale, xLabel: string, yLabel: string): void {
    const { left, right, top, bottom } = MARGIN;
    const x0 = left;
    const x1 = WIDTH - right;
    const y0 = HEIGHT - bottom;
    const y1 = top;
    const xTicks = x.log ? logTicks(x.lo, x.hi) : linearTicks(x.lo, x.hi);
    for (const t of xTicks) {
      const px = x(t);
      this.line(px, y0, px, y1, "#eeeeee");
      this.text(px, y0 + 18, tickLabel(t, x.log), 11);
    }
    const yTicks = y.log ? logTicks(y.lo, y.hi) : linearTicks(y.lo, y.hi);
    for (const t of yTicks) {
      const py = y(t);
      this.line(x0, py, x1, py, "#eeeeee");
      this.text(x0 - 8, py + 4, tickLabel(t, y.log), 11, "end");
    }
    this.line(x0, y0, x1, y0, "#000000");
    this.line(x0, y0, x0, y1, "#000000");
    this.text((x0 + x1) / 2, HEIGHT - 12, xLabel, 13);
    this.parts.push(
      `<text x="18" y="${(y0 + y1) / 2}" text-anchor="middle" font-size="13" transform="rotate(-90 18 ${(y0 + y1) / 2})">${escapeXml(yLabel)}</text>`,
    );
  }

  legend(entries: Array<{ label: string; color: string; dashed?: boolean }>): void {
    const x = MARGIN.left + 12;
    entries.forEach((entry, i) => {
      const y = MARGIN.top + 14 + 16 * i;
      const dash = entry.dashed ? ` stroke-dasharray="6,4"` : "";
      this.parts.push(
        `<line x1="${x}" y1="${y}" x2="${x + 26}" y2="${y}" stroke="${entry.color}" stroke-width="2"${dash}/>`,
      );
      this.text(x + 32, y + 4, entry.label, 11, "start");
    });
  }

  render(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}

export function placeholder(title: string, message: string): string {
  const canvas = new SvgCanvas(title);
  canvas.text(WIDTH / 2, HEIGHT / 2, message, 18, "middle", "#888888");
  return canvas.render();
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
