/** Pareto table rendering: pure functions from API rows to HTML. */

import type { ScaledRow } from "./api.js";

export type ColumnKey =
  "id" | "n" | "p_m" | "p_d" | "p_t" | "b" | "c" | "m_kb" | "f" | "total";

export interface SortSpec {
  key: ColumnKey;
  ascending: boolean;
}

export const COLUMNS: { key: ColumnKey; title: string }[] = [
  { key: "id", title: "instance" },
  { key: "n", title: "n" },
  { key: "p_m", title: "mafia" },
  { key: "p_d", title: "distance" },
  { key: "p_t", title: "terrorist" },
  { key: "b", title: "multi-bit" },
  { key: "c", title: "crypto ops" },
  { key: "m_kb", title: "memory (Kb)" },
  { key: "f", title: "final slow phase" },
  { key: "total", title: "nondominated" },
];

/** Numeric rank for power-of-two labels like "2^-16"; "0" ranks lowest. */
export function powerRank(label: string): number {
  if (label === "0") return Number.NEGATIVE_INFINITY;
  const m = /^2\^(-?\d+)$/.exec(label);
  return m ? Number(m[1]) : Number.NaN;
}

function cellValue(row: ScaledRow, key: ColumnKey): number | string {
  const v = row[key];
  if (key === "p_m" || key === "p_d" || key === "p_t") {
    return powerRank(v as string);
  }
  if (typeof v === "boolean") return v ? 1 : 0;
  return v as number | string;
}

export function sortRows(rows: ScaledRow[], sort: SortSpec): ScaledRow[] {
  const out = [...rows];
  out.sort((a, b) => {
    const va = cellValue(a, sort.key);
    const vb = cellValue(b, sort.key);
    let cmp: number;
    if (typeof va === "string" || typeof vb === "string") {
      cmp = String(va).localeCompare(String(vb));
    } else {
      cmp = va === vb ? 0 : va < vb ? -1 : 1;
    }
    return sort.ascending ? cmp : -cmp;
  });
  return out;
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;")
    .replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

export function renderTable(rows: ScaledRow[], sort: SortSpec,
                            selected: string[]): string {
  const sorted = sortRows(rows, sort);
  const head = COLUMNS.map((col) => {
    const arrow = sort.key === col.key ? (sort.ascending ? " ▲" : " ▼") : "";
    return `<th data-key="${col.key}">${esc(col.title)}${arrow}</th>`;
  }).join("");
  const body = sorted.map((row) => {
    const checked = selected.includes(row.id) ? " checked" : "";
    const cells = [
      `<td><label><input type="checkbox" data-id="${esc(row.id)}"${checked}> ` +
      `${esc(row.id)}</label></td>`,
      `<td>${row.n}</td>`,
      `<td>${esc(row.p_m)}</td>`,
      `<td>${esc(row.p_d)}</td>`,
      `<td>${esc(row.p_t)}</td>`,
      `<td>${row.b}</td>`,
      `<td>${row.c}</td>`,
      `<td>${row.m_kb}</td>`,
      `<td>${row.f}</td>`,
      `<td>${row.total}</td>`,
    ].join("");
    return `<tr>${cells}</tr>`;
  }).join("\n");
  return `<table class="pareto">\n<thead><tr>${head}</tr></thead>\n` +
    `<tbody>\n${body}\n</tbody>\n</table>`;
}

export function renderEmptyState(protocolsEnabled: number): string {
  if (protocolsEnabled === 0) {
    return `<p class="empty">No protocols enabled — tick at least one ` +
      `protocol to see its nondominated instances.</p>`;
  }
  return `<p class="empty">No instance satisfies this bound.</p>`;
}
