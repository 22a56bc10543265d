// Pure computation of what the widget currently displays.
//
// Expansion is a fixpoint: the base grid is every start corner below the
// degree cutoff; an expanded corner contributes its edges; a shown edge
// contributes its lower corner; an expanded edge contributes its generated
// corners.  Filters then narrow the displayed sets conjunctively; the
// final-only lens switches the corner base to the dataset's final corners.

import { DatasetIndex } from "./dataset.js";
import { CornerRow, EdgeRow } from "./schema.js";
import { ViewState } from "./state.js";

export interface VisibleEntities {
  corners: CornerRow[];
  edges: EdgeRow[];
  /** ids of corners revealed by expansion before filtering */
  revealed: Set<number>;
}

export function revealedSets(index: DatasetIndex, state: ViewState): {
  corners: Set<number>;
  edges: Set<number>;
} {
  const corners = new Set<number>();
  const edges = new Set<number>();
  for (const corner of index.startCorners()) {
    if (index.v11(corner) < state.deg) corners.add(corner.id);
  }
  let changed = true;
  while (changed) {
    changed = false;
    for (const cornerId of [...corners]) {
      if (!state.expandedCorners.has(cornerId)) continue;
      for (const edgeId of index.corner(cornerId).edge_ids) {
        if (!edges.has(edgeId)) {
          edges.add(edgeId);
          changed = true;
        }
      }
    }
    for (const edgeId of [...edges]) {
      const edge = index.edge(edgeId);
      if (!corners.has(edge.bottom)) {
        corners.add(edge.bottom);
        changed = true;
      }
      if (state.expandedEdges.has(edgeId)) {
        for (const link of edge.generated) {
          if (!corners.has(link.corner)) {
            corners.add(link.corner);
            changed = true;
          }
        }
      }
    }
  }
  return { corners, edges };
}

function cornerPasses(index: DatasetIndex, state: ViewState, corner: CornerRow): boolean {
  const { admissibleOnly, chainLength } = state.filters;
  if (admissibleOnly && !corner.admissible_member) return false;
  if (chainLength > 0 && !index.chainLengthsByCorner.get(corner.id)?.has(chainLength)) {
    return false;
  }
  return true;
}

function edgePasses(index: DatasetIndex, state: ViewState, edge: EdgeRow): boolean {
  if (state.filters.finalOnly) return false;
  if (state.filters.admissibleOnly && !edge.admissible_member) return false;
  const { chainLength } = state.filters;
  if (chainLength > 0 && !index.chainLengthsByEdge.get(edge.id)?.has(chainLength)) {
    return false;
  }
  return true;
}

export function visibleEntities(index: DatasetIndex, state: ViewState): VisibleEntities {
  const revealed = revealedSets(index, state);
  const cornerBase = state.filters.finalOnly
    ? index.doc.corners.filter((c) => c.final).map((c) => c.id)
    : [...revealed.corners];
  const corners = cornerBase
    .map((id) => index.corner(id))
    .filter((c) => cornerPasses(index, state, c))
    .sort((c1, c2) => c1.id - c2.id);
  const edges = [...revealed.edges]
    .map((id) => index.edge(id))
    .filter((e) => edgePasses(index, state, e))
    .sort((e1, e2) => e1.id - e2.id);
  return { corners, edges, revealed: revealed.corners };
}

export interface FilterCounts {
  finals: number;
  members: number;
  byLength: Map<number, number>;
}

export function filterCounts(index: DatasetIndex): FilterCounts {
  const byLength = new Map<number, number>();
  for (const chain of index.doc.chains) {
    if (chain.admissible) {
      byLength.set(chain.length, (byLength.get(chain.length) ?? 0) + 1);
    }
  }
  return {
    finals: index.doc.corners.filter((c) => c.final).length,
    members: index.doc.corners.filter((c) => c.admissible_member).length,
    byLength,
  };
}
