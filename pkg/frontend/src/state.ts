// View state: what is loaded, what is expanded, and which filters apply.
// The whole state round-trips through the URL hash so views are shareable.

export interface Filters {
  finalOnly: boolean;
  admissibleOnly: boolean;
  /** show only entities on admissible chains of this length; 0 = any */
  chainLength: number;
}

export interface Transform {
  x: number;
  y: number;
  scale: number;
}

export class ViewState {
  deg: number;
  expandedCorners = new Set<number>();
  expandedEdges = new Set<number>();
  filters: Filters = { finalOnly: false, admissibleOnly: false, chainLength: 0 };
  transform: Transform = { x: 0, y: 0, scale: 1 };

  constructor(deg = 36) {
    this.deg = deg;
  }

  toggleCorner(id: number): boolean {
    return toggle(this.expandedCorners, id);
  }

  toggleEdge(id: number): boolean {
    return toggle(this.expandedEdges, id);
  }
}

function toggle(set: Set<number>, id: number): boolean {
  if (set.has(id)) {
    set.delete(id);
    return false;
  }
  set.add(id);
  return true;
}

function encodeIds(ids: Set<number>): string {
  return [...ids].sort((a, b) => a - b).join(".");
}

function decodeIds(text: string | null): Set<number> {
  const out = new Set<number>();
  if (text) {
    for (const part of text.split(".")) {
      const id = Number(part);
      if (Number.isInteger(id)) out.add(id);
    }
  }
  return out;
}

export function encodeState(state: ViewState): string {
  const params = new URLSearchParams();
  params.set("deg", String(state.deg));
  if (state.expandedCorners.size) params.set("ec", encodeIds(state.expandedCorners));
  if (state.expandedEdges.size) params.set("ee", encodeIds(state.expandedEdges));
  if (state.filters.finalOnly) params.set("ff", "1");
  if (state.filters.admissibleOnly) params.set("fa", "1");
  if (state.filters.chainLength) params.set("fl", String(state.filters.chainLength));
  const t = state.transform;
  if (t.x !== 0 || t.y !== 0 || t.scale !== 1) {
    params.set("t", `${t.x.toFixed(2)}_${t.y.toFixed(2)}_${t.scale.toFixed(3)}`);
  }
  return params.toString();
}

export function decodeState(hash: string): ViewState {
  const params = new URLSearchParams(hash.replace(/^#/, ""));
  const state = new ViewState(Number(params.get("deg") ?? 36) || 36);
  state.expandedCorners = decodeIds(params.get("ec"));
  state.expandedEdges = decodeIds(params.get("ee"));
  state.filters.finalOnly = params.get("ff") === "1";
  state.filters.admissibleOnly = params.get("fa") === "1";
  state.filters.chainLength = Number(params.get("fl") ?? 0) || 0;
  const t = params.get("t");
  if (t) {
    const [x, y, scale] = t.split("_").map(Number);
    if ([x, y, scale].every(Number.isFinite) && scale > 0) {
      state.transform = { x, y, scale };
    }
  }
  return state;
}
