// SVG construction.  Corners sit at (a/l, b) in data space with the y axis
// flipped for screen display; marker shape encodes the level (circle at
// level 1, diamond above), and final corners carry a highlight ring.

import { DatasetIndex } from "./dataset.js";
import { CornerRow, EdgeRow } from "./schema.js";

export const SVG_NS = "http://www.w3.org/2000/svg";
const UNIT = 28; // pixels per lattice unit at scale 1

export function dataToScreen(x: number, y: number): { x: number; y: number } {
  return { x: x * UNIT, y: -y * UNIT };
}

function el(name: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

export function gridLines(maxX: number, maxY: number): SVGElement {
  const group = el("g", { class: "grid" });
  for (let x = 0; x <= maxX; x += 1) {
    const top = dataToScreen(x, maxY);
    const bottom = dataToScreen(x, 0);
    group.appendChild(
      el("line", {
        x1: String(top.x),
        y1: String(top.y),
        x2: String(bottom.x),
        y2: String(bottom.y),
        class: x % 5 === 0 ? "grid-major" : "grid-minor",
      }),
    );
  }
  for (let y = 0; y <= maxY; y += 1) {
    const left = dataToScreen(0, y);
    const right = dataToScreen(maxX, y);
    group.appendChild(
      el("line", {
        x1: String(left.x),
        y1: String(left.y),
        x2: String(right.x),
        y2: String(right.y),
        class: y % 5 === 0 ? "grid-major" : "grid-minor",
      }),
    );
  }
  return group;
}

export function cornerMarker(index: DatasetIndex, corner: CornerRow): SVGElement {
  const pos = dataToScreen(index.x(corner), corner.b);
  const group = el("g", {
    class:
      "corner" +
      (corner.final ? " final" : "") +
      (corner.admissible_member ? " member" : "") +
      (corner.start ? " start" : ""),
    "data-corner-id": String(corner.id),
    transform: `translate(${pos.x}, ${pos.y})`,
  });
  if (corner.final) {
    group.appendChild(el("circle", { r: "9", class: "final-ring" }));
  }
  if (corner.l === 1) {
    group.appendChild(el("circle", { r: "5", class: "corner-shape" }));
  } else {
    group.appendChild(
      el("rect", {
        x: "-5",
        y: "-5",
        width: "10",
        height: "10",
        transform: "rotate(45)",
        class: "corner-shape",
      }),
    );
  }
  const title = document.createElementNS(SVG_NS, "title");
  title.textContent = `${corner.display}${corner.final ? " (final)" : ""}`;
  group.appendChild(title);
  return group;
}

export function edgeLine(index: DatasetIndex, edge: EdgeRow): SVGElement {
  const top = index.corner(edge.top);
  const bottom = index.corner(edge.bottom);
  const p1 = dataToScreen(index.x(top), top.b);
  const p2 = dataToScreen(index.x(bottom), bottom.b);
  const group = el("g", {
    class: "edge" + (edge.admissible_member ? " member" : "") + (edge.simple ? " simple" : ""),
    "data-edge-id": String(edge.id),
    "data-top-id": String(edge.top),
    "data-bottom-id": String(edge.bottom),
  });
  group.appendChild(
    el("line", {
      x1: String(p1.x),
      y1: String(p1.y),
      x2: String(p2.x),
      y2: String(p2.y),
      class: "edge-line",
    }),
  );
  // clickable lower endpoint, offset along the edge so stacked edges
  // sharing a lower corner stay individually selectable
  const t = 0.92;
  const hx = p1.x + (p2.x - p1.x) * t;
  const hy = p1.y + (p2.y - p1.y) * t;
  group.appendChild(
    el("circle", {
      cx: String(hx),
      cy: String(hy),
      r: "6",
      class: "edge-bottom",
      "data-edge-id": String(edge.id),
    }),
  );
  return group;
}
