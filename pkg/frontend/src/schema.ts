// Dataset document shapes, mirroring the engine's JSON export (schema
// version 1).  The widget never derives relations itself: everything it
// shows is one of these records or a link between them.

export interface CornerRow {
  id: number;
  a: number;
  l: number;
  b: number;
  display: string;
  v11: { num: number; den: number };
  start: boolean;
  final: boolean;
  admissible_member: boolean;
  edge_ids: number[];
}

export interface GeneratedLink {
  corner: number;
  final: boolean;
}

export interface EdgeRow {
  id: number;
  top: number;
  bottom: number;
  rho: number;
  sigma: number;
  simple: boolean;
  expanded: boolean;
  generated: GeneratedLink[];
  admissible_member: boolean;
}

export interface FamilyRef {
  k: number;
  i: number;
  m0: number;
  n0: number;
  dm: number;
  dn: number;
  annotation?: string;
}

export interface ChainRow {
  id: number;
  a0: number;
  b0: number;
  edge_ids: number[];
  corners: string[];
  final: { a: number; l: number; b: number };
  length: number;
  admissible: boolean;
  families: FamilyRef[];
}

export interface Dataset {
  schema_version: number;
  meta: Record<string, unknown>;
  pllc: { a: number; b: number; rho: number; sigma: number }[];
  corners: CornerRow[];
  edges: EdgeRow[];
  chains: ChainRow[];
}

export class SchemaError extends Error {}

const SUPPORTED_SCHEMA_VERSION = 1;

function expectArray(doc: Record<string, unknown>, key: string): unknown[] {
  const value = doc[key];
  if (!Array.isArray(value)) {
    throw new SchemaError(`dataset field "${key}" missing or not an array`);
  }
  return value;
}

/** Validate the parts of a parsed document the widget relies on. */
export function validateDataset(raw: unknown): Dataset {
  if (typeof raw !== "object" || raw === null) {
    throw new SchemaError("dataset is not a JSON object");
  }
  const doc = raw as Record<string, unknown>;
  if (doc.schema_version !== SUPPORTED_SCHEMA_VERSION) {
    throw new SchemaError(
      `unsupported schema version ${String(doc.schema_version)}; expected ${SUPPORTED_SCHEMA_VERSION}`,
    );
  }
  for (const key of ["pllc", "corners", "edges", "chains"]) {
    expectArray(doc, key);
  }
  for (const corner of expectArray(doc, "corners") as CornerRow[]) {
    if (
      typeof corner.id !== "number" ||
      typeof corner.a !== "number" ||
      typeof corner.l !== "number" ||
      typeof corner.b !== "number" ||
      typeof corner.v11?.num !== "number" ||
      !Array.isArray(corner.edge_ids)
    ) {
      throw new SchemaError(`malformed corner row ${JSON.stringify(corner)}`);
    }
  }
  for (const edge of expectArray(doc, "edges") as EdgeRow[]) {
    if (
      typeof edge.id !== "number" ||
      typeof edge.top !== "number" ||
      typeof edge.bottom !== "number" ||
      !Array.isArray(edge.generated)
    ) {
      throw new SchemaError(`malformed edge row ${JSON.stringify(edge)}`);
    }
  }
  return doc as unknown as Dataset;
}
