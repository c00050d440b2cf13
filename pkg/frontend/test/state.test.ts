import { describe, expect, it } from "vitest";

import { ALL_PROTOCOLS, boundDecimal, boundLabel, defaultState, deserialize,
         serialize, toggleProtocol, toggleSelected } from "../src/state.js";

describe("query state", () => {
  it("has a sensible default", () => {
    const s = defaultState();
    expect(s.yExp).toBe(-16);
    expect(s.protocols.length).toBe(12);
    expect(s.view).toBe("table");
  });

  it("round-trips through the URL query string", () => {
    const states = [
      defaultState(),
      { yExp: 0, protocols: ["BC"], selected: [], view: "table" as const },
      { yExp: -128, protocols: [], selected: ["BC-{16}"],
        view: "spider" as const },
      { yExp: -33, protocols: ["BC", "SKI", "Tree"],
        selected: ["Tree-{16,8}", "SKI-{64,2}"], view: "curves" as const },
    ];
    for (const s of states) {
      expect(deserialize(serialize(s))).toEqual(s);
    }
  });

  it("serialize(deserialize(q)) is stable for valid query strings", () => {
    const qs = [
      "y=-16&p=BC.SKI&view=table",
      "y=0&p=&view=spider",
      "y=-128&p=BC&sel=BC-%7B16%7D&view=curves",
    ];
    for (const q of qs) {
      const once = serialize(deserialize(q));
      expect(serialize(deserialize(once))).toBe(once);
    }
  });

  it("resets invalid values to defaults", () => {
    const s = deserialize("y=banana&p=BC.Nope&view=dance");
    expect(s.yExp).toBe(-16);
    expect(s.protocols).toEqual(["BC"]);
    expect(s.view).toBe("table");
    expect(deserialize("y=17").yExp).toBe(0);      // clamped into [-128, 0]
    expect(deserialize("y=-500").yExp).toBe(-128);
  });

  it("caps spider selections at five", () => {
    let s = { ...defaultState(), selected: [] as string[] };
    for (let i = 0; i < 7; i++) {
      s = toggleSelected(s, `BC-{${i + 1}}`);
    }
    expect(s.selected.length).toBe(5);
    s = toggleSelected(s, "BC-{1}");
    expect(s.selected.length).toBe(4);
  });

  it("deserialization enforces the selection cap", () => {
    const sel = ["a", "b", "c", "d", "e", "f"].join("|");
    const s = deserialize(`sel=${encodeURIComponent(sel)}`);
    expect(s.selected.length).toBe(5);
  });

  it("toggles protocols", () => {
    let s = { ...defaultState(), protocols: ["BC"] };
    s = toggleProtocol(s, "SKI");
    expect(s.protocols).toEqual(["BC", "SKI"]);
    s = toggleProtocol(s, "BC");
    expect(s.protocols).toEqual(["SKI"]);
    expect(ALL_PROTOCOLS).toContain("SwissKnife");
  });

  it("renders the bound both ways", () => {
    expect(boundLabel(-16)).toBe("2^-16");
    expect(boundDecimal(0)).toBe("1");
    expect(boundDecimal(-1)).toBe("0.5");
    expect(boundDecimal(-16)).toMatch(/e-/);
  });
});
