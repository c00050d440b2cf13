import { describe, expect, it } from "vitest";

import type { ScaledRow } from "../src/api.js";
import { powerRank, renderEmptyState, renderTable,
         sortRows } from "../src/table.js";

const ROWS: ScaledRow[] = [
  { id: "BC-{16}", n: 16, p_m: "2^-16", p_d: "2^-16", p_t: "2^0",
    b: false, c: 2, m_kb: 0, f: true, total: 241 },
  { id: "SKI-{39,2}", n: 39, p_m: "2^-16", p_d: "2^-16", p_t: "2^-39",
    b: true, c: 1, m_kb: 0, f: false, total: 218 },
  { id: "SwissKnife-{16}", n: 16, p_m: "2^-16", p_d: "2^-6", p_t: "2^-6",
    b: false, c: 2, m_kb: 0, f: true, total: 241 },
];

describe("pareto table", () => {
  it("renders exactly the API rows, in order, one cell per column", () => {
    const html = renderTable(ROWS, { key: "id", ascending: true }, []);
    const bodyRows = html.match(/<tr>/g)!.length - 1;  // minus header row
    expect(bodyRows).toBe(ROWS.length);
    for (const row of ROWS) {
      expect(html).toContain(row.id);
      expect(html).toContain(`<td>${row.total}</td>`);
    }
    // column order fixed: instance id first, totals last
    const firstCells = html.split("<tr>")[2];
    expect(firstCells.indexOf("BC-{16}"))
      .toBeLessThan(firstCells.indexOf("241"));
  });

  it("sorts by any column with power-of-two awareness", () => {
    const byEnergy = sortRows(ROWS, { key: "p_t", ascending: true });
    expect(byEnergy[0].id).toBe("SKI-{39,2}");
    const byCryptoDesc = sortRows(ROWS, { key: "c", ascending: false });
    expect(byCryptoDesc[0].c).toBe(2);
    const byId = sortRows(ROWS, { key: "id", ascending: true });
    expect(byId.map((r) => r.id)).toEqual(
      ["BC-{16}", "SKI-{39,2}", "SwissKnife-{16}"]);
  });

  it("keeps the input array untouched", () => {
    const before = ROWS.map((r) => r.id);
    sortRows(ROWS, { key: "n", ascending: false });
    expect(ROWS.map((r) => r.id)).toEqual(before);
  });

  it("ranks power labels numerically", () => {
    expect(powerRank("2^-16")).toBe(-16);
    expect(powerRank("2^0")).toBe(0);
    expect(powerRank("0")).toBe(Number.NEGATIVE_INFINITY);
    expect(powerRank("2^-128")).toBeLessThan(powerRank("2^-16"));
  });

  it("marks selected instances and escapes markup", () => {
    const html = renderTable(ROWS, { key: "id", ascending: true },
                             ["BC-{16}"]);
    expect(html).toContain('data-id="BC-{16}" checked');
    const hostile: ScaledRow = { ...ROWS[0], id: "X<script>-{1}" };
    const rendered = renderTable([hostile], { key: "id", ascending: true }, []);
    expect(rendered).not.toContain("<script>");
  });

  it("distinguishes the two empty states", () => {
    expect(renderEmptyState(0)).toContain("No protocols enabled");
    expect(renderEmptyState(3)).toContain("No instance satisfies");
  });
});
