import assert from "node:assert/strict";
import { test } from "node:test";
import { existsSync, mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { renderBoundMargins, renderEnergyDrift, renderGrowthCurve } from "../src/figures";
import { main } from "../src/main";

// real artifacts produced by the simulation CLI (see fixtures/regen.sh)
const FIXTURES = join(__dirname, "..", "..", "tests", "fixtures");

function fixture(name: string): string {
  return readFileSync(join(FIXTURES, name), "utf8");
}

test("growth curves render for the 1D/2D/3D sweeps with envelopes", () => {
  for (const dim of [1, 2, 3]) {
    const svg = renderGrowthCurve(fixture(`norms_${dim}d.csv`), fixture(`fit_${dim}d.json`));
    assert.match(svg, /<svg /, `dim ${dim}`);
    assert.match(svg, /lower envelope/);
    assert.match(svg, /upper envelope/);
    const expected = { 1: "linear_in_t", 2: "linear_in_log_t", 3: "constant" }[dim as 1 | 2 | 3];
    assert.match(svg, new RegExp(expected!), `dim ${dim} selects ${expected}`);
  }
});

test("bound margins figure renders every check series", () => {
  const svg = renderBoundMargins(fixture("bounds_1d.csv"));
  assert.match(svg, /partition-identity/);
  assert.match(svg, /low-shell-sine-floor/);
});

test("energy drift figure renders from a real evolve artifact", () => {
  const svg = renderEnergyDrift(fixture("evolve_1d.csv"));
  assert.match(svg, /relative drift/);
});

test("cli reruns produce identical bytes on real artifacts", () => {
  const dir = mkdtempSync(join(tmpdir(), "imbq-int-"));
  const argsFor = (out: string) => [
    "growth_curve",
    "--input",
    join(FIXTURES, "norms_2d.csv"),
    "--fit",
    join(FIXTURES, "fit_2d.json"),
    "--out",
    out,
  ];
  const first = join(dir, "a.svg");
  const second = join(dir, "b.svg");
  assert.equal(main(argsFor(first)), 0);
  assert.equal(main(argsFor(second)), 0);
  assert.ok(existsSync(first));
  assert.deepEqual(readFileSync(first), readFileSync(second));
});
