/**
 * Explorer query state, serializable to and from the URL query string so
 * any exploration can be shared as a link.
 */

export type View = "table" | "spider" | "curves";

export interface QueryState {
  /** Mafia-fraud bound as a log2 exponent: 0 (no constraint) .. -128. */
  yExp: number;
  /** Enabled protocol ids; empty means none selected. */
  protocols: string[];
  /** Instances selected for the spider comparison (at most 5). */
  selected: string[];
  view: View;
}

export const ALL_PROTOCOLS = [
  "BB", "BC", "HK", "KA", "MAD", "MP", "Poulidor", "RC", "SKI",
  "SwissKnife", "TMA", "Tree",
] as const;

export const MAX_SELECTED = 5;

export function defaultState(): QueryState {
  return {
    yExp: -16,
    protocols: [...ALL_PROTOCOLS],
    selected: [],
    view: "table",
  };
}

export function boundLabel(yExp: number): string {
  return yExp === 0 ? "2^0" : `2^${yExp}`;
}

export function boundDecimal(yExp: number): string {
  const v = Math.pow(2, yExp);
  if (v >= 0.001) return v.toPrecision(3).replace(/\.?0+$/, "");
  return v.toExponential(2);
}

function clampExp(raw: number): number {
  if (!Number.isFinite(raw)) return -16;
  return Math.max(-128, Math.min(0, Math.round(raw)));
}

export function serialize(state: QueryState): string {
  const params = new URLSearchParams();
  params.set("y", String(state.yExp));
  params.set("p", state.protocols.join("."));
  if (state.selected.length > 0) {
    params.set("sel", state.selected.join("|"));
  }
  params.set("view", state.view);
  return params.toString();
}

export function deserialize(query: string): QueryState {
  const fallback = defaultState();
  let params: URLSearchParams;
  try {
    params = new URLSearchParams(query);
  } catch {
    return fallback;
  }
  const state = { ...fallback };
  const y = params.get("y");
  if (y !== null) {
    state.yExp = clampExp(Number(y));
  }
  const p = params.get("p");
  if (p !== null) {
    const known = new Set<string>(ALL_PROTOCOLS);
    state.protocols = p.split(".").filter((x) => known.has(x));
  }
  const sel = params.get("sel");
  if (sel !== null) {
    state.selected = sel.split("|").filter((x) => x.length > 0)
      .slice(0, MAX_SELECTED);
  } else {
    state.selected = [];
  }
  const view = params.get("view");
  if (view === "table" || view === "spider" || view === "curves") {
    state.view = view;
  }
  return state;
}

/** Toggle one instance selection, enforcing the comparison limit. */
export function toggleSelected(state: QueryState, id: string): QueryState {
  const selected = state.selected.includes(id)
    ? state.selected.filter((x) => x !== id)
    : state.selected.length < MAX_SELECTED
      ? [...state.selected, id]
      : state.selected;
  return { ...state, selected };
}

export function toggleProtocol(state: QueryState, id: string): QueryState {
  const protocols = state.protocols.includes(id)
    ? state.protocols.filter((x) => x !== id)
    : [...state.protocols, id].sort();
  return { ...state, protocols };
}
