import { describe, expect, it } from "vitest";

import dataset from "../fixtures/dataset-m35.json";
import { indexDataset } from "../src/dataset";
import { SchemaError, validateDataset } from "../src/schema";

describe("dataset validation", () => {
  it("accepts the exported fixture", () => {
    const doc = validateDataset(dataset);
    expect(doc.schema_version).toBe(1);
    expect(doc.corners.length).toBeGreaterThan(0);
  });

  it("rejects wrong schema versions and malformed documents", () => {
    expect(() => validateDataset({ schema_version: 99 })).toThrow(SchemaError);
    expect(() => validateDataset(null)).toThrow(SchemaError);
    expect(() =>
      validateDataset({ schema_version: 1, pllc: [], corners: [{}], edges: [], chains: [] }),
    ).toThrow(SchemaError);
  });
});

describe("dataset index", () => {
  const index = indexDataset(dataset);

  it("resolves every relation in the document", () => {
    for (const edge of index.doc.edges) {
      expect(index.corner(edge.top)).toBeDefined();
      expect(index.corner(edge.bottom)).toBeDefined();
      for (const link of edge.generated) expect(index.corner(link.corner)).toBeDefined();
    }
    for (const chain of index.doc.chains) {
      for (const edgeId of chain.edge_ids) expect(index.edge(edgeId)).toBeDefined();
    }
  });

  it("collects admissible chain lengths per corner", () => {
    const root = index.doc.corners.find((c) => c.display === "4:12")!;
    expect(index.chainLengthsByCorner.get(root.id)).toEqual(new Set([1]));
    const mid = index.doc.corners.find((c) => c.display === "6:15")!;
    expect(index.chainLengthsByCorner.get(mid.id)).toEqual(new Set([1, 2]));
  });

  it("computes realizations for display", () => {
    const corner = index.doc.corners.find((c) => c.display === "7⊛4:3")!;
    expect(index.x(corner)).toBeCloseTo(1.75, 6);
    expect(index.v11(corner)).toBeCloseTo(1.75 + 3, 6);
  });
});
