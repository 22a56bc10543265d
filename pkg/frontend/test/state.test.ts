import { describe, expect, it } from "vitest";

import { decodeState, encodeState, ViewState } from "../src/state";

describe("view state", () => {
  it("round-trips through the URL hash", () => {
    const state = new ViewState(40);
    state.toggleCorner(73);
    state.toggleCorner(12);
    state.toggleEdge(404);
    state.filters.admissibleOnly = true;
    state.filters.chainLength = 2;
    state.transform = { x: 12.5, y: -3, scale: 1.75 };

    const decoded = decodeState(`#${encodeState(state)}`);
    expect(decoded.deg).toBe(40);
    expect([...decoded.expandedCorners].sort((a, b) => a - b)).toEqual([12, 73]);
    expect([...decoded.expandedEdges]).toEqual([404]);
    expect(decoded.filters).toEqual({ finalOnly: false, admissibleOnly: true, chainLength: 2 });
    expect(decoded.transform.scale).toBeCloseTo(1.75, 3);
  });

  it("toggling twice collapses", () => {
    const state = new ViewState();
    expect(state.toggleCorner(5)).toBe(true);
    expect(state.toggleCorner(5)).toBe(false);
    expect(state.expandedCorners.size).toBe(0);
  });

  it("tolerates an empty or garbled hash", () => {
    expect(decodeState("").deg).toBe(36);
    const state = decodeState("#deg=oops&ec=1.x.3&t=1_2");
    expect(state.deg).toBe(36);
    expect([...state.expandedCorners].sort((a, b) => a - b)).toEqual([1, 3]);
    expect(state.transform).toEqual({ x: 0, y: 0, scale: 1 });
  });
});
