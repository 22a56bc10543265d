// Indexed view over a validated dataset document.

import { ChainRow, CornerRow, Dataset, EdgeRow, SchemaError, validateDataset } from "./schema.js";

export class DatasetIndex {
  readonly doc: Dataset;
  readonly cornersById = new Map<number, CornerRow>();
  readonly edgesById = new Map<number, EdgeRow>();
  /** admissible-chain lengths each corner participates in */
  readonly chainLengthsByCorner = new Map<number, Set<number>>();
  readonly chainLengthsByEdge = new Map<number, Set<number>>();

  constructor(doc: Dataset) {
    this.doc = doc;
    for (const corner of doc.corners) this.cornersById.set(corner.id, corner);
    for (const edge of doc.edges) this.edgesById.set(edge.id, edge);
    for (const chain of doc.chains) {
      if (!chain.admissible) continue;
      for (const cornerId of this.chainCornerIds(chain)) {
        let set = this.chainLengthsByCorner.get(cornerId);
        if (!set) this.chainLengthsByCorner.set(cornerId, (set = new Set()));
        set.add(chain.length);
      }
      for (const edgeId of chain.edge_ids) {
        let set = this.chainLengthsByEdge.get(edgeId);
        if (!set) this.chainLengthsByEdge.set(edgeId, (set = new Set()));
        set.add(chain.length);
      }
    }
  }

  chainCornerIds(chain: ChainRow): number[] {
    const ids: number[] = [];
    for (const edgeId of chain.edge_ids) {
      const edge = this.edgesById.get(edgeId);
      if (edge) ids.push(edge.top, edge.bottom);
    }
    const final = this.doc.corners.find(
      (c) => c.a === chain.final.a && c.l === chain.final.l && c.b === chain.final.b,
    );
    if (final) ids.push(final.id);
    return ids;
  }

  corner(id: number): CornerRow {
    const corner = this.cornersById.get(id);
    if (!corner) throw new SchemaError(`dangling corner reference ${id}`);
    return corner;
  }

  edge(id: number): EdgeRow {
    const edge = this.edgesById.get(id);
    if (!edge) throw new SchemaError(`dangling edge reference ${id}`);
    return edge;
  }

  x(corner: CornerRow): number {
    return corner.a / corner.l;
  }

  v11(corner: CornerRow): number {
    return corner.v11.num / corner.v11.den;
  }

  startCorners(): CornerRow[] {
    return this.doc.corners.filter((c) => c.start);
  }
}

export function indexDataset(raw: unknown): DatasetIndex {
  return new DatasetIndex(validateDataset(raw));
}

export async function loadDataset(url: string): Promise<DatasetIndex> {
  const response = await fetch(url);
  if (!response.ok) {
    throw new SchemaError(`cannot load dataset: HTTP ${response.status} for ${url}`);
  }
  return indexDataset(await response.json());
}
