// End-to-end interaction test against the real exported dataset: mount the
// widget, click through the reference expansion, and exercise the filters.

import { beforeEach, describe, expect, it } from "vitest";

import dataset from "../fixtures/dataset-m35.json";
import { indexDataset } from "../src/dataset";
import { SchemaError } from "../src/schema";
import { mountExplorer, ExplorerWidget } from "../src/widget";

const index = indexDataset(dataset);

function cornerByDisplay(display: string) {
  const corner = index.doc.corners.find((c) => c.display === display);
  if (!corner) throw new Error(`no corner ${display} in fixture`);
  return corner;
}

function visibleCornerIds(container: HTMLElement): Set<number> {
  return new Set(
    [...container.querySelectorAll("[data-corner-id]")].map((node) =>
      Number(node.getAttribute("data-corner-id")),
    ),
  );
}

function click(node: Element): void {
  node.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

describe("explorer end to end", () => {
  let container: HTMLElement;
  let widget: ExplorerWidget;

  beforeEach(() => {
    document.body.innerHTML = "";
    window.location.hash = "";
    container = document.createElement("div");
    document.body.appendChild(container);
    widget = mountExplorer(container, index);
  });

  it("shows every start corner below the degree cutoff", () => {
    const visible = visibleCornerIds(container);
    const expected = index.doc.corners.filter((c) => c.start && index.v11(c) < 36);
    for (const corner of expected) expect(visible).toContain(corner.id);
    // nothing above the cutoff
    widget.state.deg = 16;
    widget.render();
    const trimmed = visibleCornerIds(container);
    for (const id of trimmed) {
      const corner = index.corner(id);
      expect(index.v11(corner)).toBeLessThan(16);
    }
    // below the first admissible root nothing is a chain member
    widget.state.filters.admissibleOnly = true;
    widget.render();
    expect(visibleCornerIds(container).size).toBe(0);
  });

  it("clicking (4,12) reveals its edges, including the one to (1,0)", () => {
    const root = cornerByDisplay("4:12");
    const bottom = cornerByDisplay("1:0");
    click(container.querySelector(`[data-corner-id="${root.id}"]`)!);
    const edges = [...container.querySelectorAll(`[data-top-id="${root.id}"]`)];
    expect(edges.length).toBe(root.edge_ids.length);
    const toBottom = edges.filter(
      (e) => Number(e.getAttribute("data-bottom-id")) === bottom.id,
    );
    expect(toBottom.length).toBe(1);
    // second click collapses
    click(container.querySelector(`[data-corner-id="${root.id}"]`)!);
    expect(container.querySelectorAll(`[data-top-id="${root.id}"]`).length).toBe(0);
  });

  it("clicking the edge bottom reveals the generated corners with final marking", () => {
    const root = cornerByDisplay("4:12");
    const bottom = cornerByDisplay("1:0");
    click(container.querySelector(`[data-corner-id="${root.id}"]`)!);
    const edgeNode = [...container.querySelectorAll(`[data-top-id="${root.id}"]`)].find(
      (e) => Number(e.getAttribute("data-bottom-id")) === bottom.id,
    )!;
    click(edgeNode.querySelector("circle.edge-bottom")!);

    const low = cornerByDisplay("6⊛4:2");
    const high = cornerByDisplay("7⊛4:3");
    const visible = visibleCornerIds(container);
    expect(visible).toContain(low.id);
    expect(visible).toContain(high.id);
    const highNode = container.querySelector(`[data-corner-id="${high.id}"]`)!;
    expect(highNode.classList.contains("final")).toBe(true);
    expect(highNode.querySelector(".final-ring")).not.toBeNull();
    const lowNode = container.querySelector(`[data-corner-id="${low.id}"]`)!;
    expect(lowNode.classList.contains("final")).toBe(false);
  });

  it("admissible-only filter leaves exactly the chain-member corners", () => {
    const root = cornerByDisplay("4:12");
    const bottom = cornerByDisplay("1:0");
    click(container.querySelector(`[data-corner-id="${root.id}"]`)!);
    const edgeNode = [...container.querySelectorAll(`[data-top-id="${root.id}"]`)].find(
      (e) => Number(e.getAttribute("data-bottom-id")) === bottom.id,
    )!;
    click(edgeNode.querySelector("circle.edge-bottom")!);

    const box = container.querySelector("input.filter-admissible") as HTMLInputElement;
    box.checked = true;
    box.dispatchEvent(new Event("change"));

    const visible = visibleCornerIds(container);
    expect(visible.size).toBeGreaterThan(0);
    for (const id of visible) {
      expect(index.corner(id).admissible_member).toBe(true);
    }
    // every revealed member stays: (7*4,3) yes, (6*4,2) filtered out
    expect(visible).toContain(cornerByDisplay("7⊛4:3").id);
    expect(visible).not.toContain(cornerByDisplay("6⊛4:2").id);
    expect(visible).toContain(root.id);
  });

  it("final-only filter shows exactly the dataset's final corners", () => {
    const box = container.querySelector("input.filter-final") as HTMLInputElement;
    box.checked = true;
    box.dispatchEvent(new Event("change"));
    const visible = visibleCornerIds(container);
    const finals = new Set(index.doc.corners.filter((c) => c.final).map((c) => c.id));
    expect(visible).toEqual(finals);
  });

  it("pan and zoom leave expansions untouched", () => {
    const root = cornerByDisplay("4:12");
    click(container.querySelector(`[data-corner-id="${root.id}"]`)!);
    const before = new Set(widget.state.expandedCorners);
    const svg = container.querySelector("svg.board")!;
    svg.dispatchEvent(new WheelEvent("wheel", { deltaY: -120, bubbles: true }));
    svg.dispatchEvent(new MouseEvent("mousedown", { clientX: 10, clientY: 10 }));
    svg.dispatchEvent(new MouseEvent("mousemove", { clientX: 40, clientY: 30 }));
    svg.dispatchEvent(new MouseEvent("mouseup", {}));
    expect(widget.state.expandedCorners).toEqual(before);
    expect(widget.state.transform.scale).not.toBe(1);
  });

  it("corner without edges flashes a hint", () => {
    const lone = index.doc.corners.find((c) => c.start && c.edge_ids.length === 0)!;
    click(container.querySelector(`[data-corner-id="${lone.id}"]`)!);
    const status = container.querySelector(".status")!;
    expect(status.textContent).toContain("no edges");
  });

  it("encodes the view in the URL hash", () => {
    const root = cornerByDisplay("4:12");
    click(container.querySelector(`[data-corner-id="${root.id}"]`)!);
    expect(window.location.hash).toContain(`ec=${root.id}`);
  });

  it("shows an error banner on schema mismatch", async () => {
    const fresh = new ExplorerWidget(document.createElement("div"));
    await fresh.load("bad.json", async () => {
      throw new SchemaError("unsupported schema version 9");
    });
    const banner = fresh.container.querySelector(".error-banner") as HTMLElement;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain("schema");
  });
});
