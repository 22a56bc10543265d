// The explorer widget: options bar, pannable/zoomable grid, filter panel.
//
// All interaction follows the dataset's precomputed relations: clicking a
// corner toggles its outgoing edges, clicking an edge's lower endpoint
// toggles the corners that edge generates, and the filter panel narrows
// what is drawn.  The URL hash always encodes the current view.

import { DatasetIndex } from "./dataset.js";
import { SchemaError } from "./schema.js";
import { ViewState, decodeState, encodeState } from "./state.js";
import { cornerMarker, edgeLine, gridLines, SVG_NS } from "./render.js";
import { filterCounts, visibleEntities } from "./visible.js";

export class ExplorerWidget {
  readonly container: HTMLElement;
  readonly state: ViewState;
  index: DatasetIndex | null = null;
  private svg!: SVGSVGElement;
  private view!: SVGGElement;
  private banner!: HTMLElement;
  private status!: HTMLElement;
  private panel!: HTMLElement;
  private degInput!: HTMLInputElement;

  constructor(container: HTMLElement, initialHash = "") {
    this.container = container;
    this.state = decodeState(initialHash);
    this.buildShell();
  }

  setDataset(index: DatasetIndex): void {
    this.index = index;
    this.banner.hidden = true;
    this.buildFilterPanel();
    this.render();
  }

  showError(message: string): void {
    this.banner.textContent = message;
    this.banner.hidden = false;
  }

  async load(url: string, loader: (u: string) => Promise<DatasetIndex>): Promise<void> {
    this.status.textContent = "loading…";
    try {
      this.setDataset(await loader(url));
      this.status.textContent = "";
    } catch (err) {
      this.status.textContent = "";
      this.showError(err instanceof SchemaError ? err.message : `load failed: ${String(err)}`);
    }
  }

  private buildShell(): void {
    this.container.classList.add("explorer");
    this.container.innerHTML = "";

    const bar = document.createElement("div");
    bar.className = "options-bar";
    const degLabel = document.createElement("label");
    degLabel.textContent = "deg ";
    this.degInput = document.createElement("input");
    this.degInput.type = "number";
    this.degInput.min = "1";
    this.degInput.value = String(this.state.deg);
    this.degInput.className = "deg-input";
    degLabel.appendChild(this.degInput);
    bar.appendChild(degLabel);

    const loadBtn = document.createElement("button");
    loadBtn.textContent = "load points";
    loadBtn.className = "load-points";
    loadBtn.addEventListener("click", () => {
      const deg = Number(this.degInput.value);
      if (Number.isFinite(deg) && deg > 0) {
        this.state.deg = deg;
        this.render();
      }
    });
    bar.appendChild(loadBtn);

    this.status = document.createElement("span");
    this.status.className = "status";
    bar.appendChild(this.status);
    this.container.appendChild(bar);

    this.banner = document.createElement("div");
    this.banner.className = "error-banner";
    this.banner.hidden = true;
    this.container.appendChild(this.banner);

    const main = document.createElement("div");
    main.className = "main";
    this.svg = document.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    this.svg.setAttribute("class", "board");
    this.svg.setAttribute("viewBox", "-40 -900 1000 940");
    this.view = document.createElementNS(SVG_NS, "g") as SVGGElement;
    this.view.setAttribute("class", "viewport");
    this.svg.appendChild(this.view);
    main.appendChild(this.svg);

    this.panel = document.createElement("div");
    this.panel.className = "filter-panel";
    main.appendChild(this.panel);
    this.container.appendChild(main);

    this.svg.addEventListener("click", (event) => this.onClick(event));
    this.wirePanAndZoom();
  }

  private buildFilterPanel(): void {
    if (!this.index) return;
    const counts = filterCounts(this.index);
    this.panel.innerHTML = "";
    const heading = document.createElement("h3");
    heading.textContent = "filters";
    this.panel.appendChild(heading);

    this.panel.appendChild(
      this.checkbox(`final corners only (${counts.finals})`, "filter-final", (on) => {
        this.state.filters.finalOnly = on;
      }),
    );
    this.panel.appendChild(
      this.checkbox(
        `admissible chain members only (${counts.members})`,
        "filter-admissible",
        (on) => {
          this.state.filters.admissibleOnly = on;
        },
      ),
    );

    const lengthLabel = document.createElement("label");
    lengthLabel.textContent = "chain length ";
    const select = document.createElement("select");
    select.className = "filter-length";
    const anyOption = document.createElement("option");
    anyOption.value = "0";
    anyOption.textContent = "any";
    select.appendChild(anyOption);
    for (const [length, count] of [...counts.byLength.entries()].sort()) {
      const option = document.createElement("option");
      option.value = String(length);
      option.textContent = `${length} (${count} chains)`;
      select.appendChild(option);
    }
    select.value = String(this.state.filters.chainLength);
    select.addEventListener("change", () => {
      this.state.filters.chainLength = Number(select.value);
      this.render();
    });
    lengthLabel.appendChild(select);
    this.panel.appendChild(lengthLabel);
  }

  private checkbox(text: string, cls: string, apply: (on: boolean) => void): HTMLElement {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.className = cls;
    box.checked = false;
    box.addEventListener("change", () => {
      apply(box.checked);
      this.render();
    });
    label.appendChild(box);
    label.appendChild(document.createTextNode(` ${text}`));
    return label;
  }

  private onClick(event: MouseEvent): void {
    if (!this.index) return;
    const target = event.target as Element | null;
    const bottomHit = target?.closest("[data-edge-id].edge-bottom, circle.edge-bottom");
    if (bottomHit) {
      const edgeId = Number(bottomHit.getAttribute("data-edge-id"));
      const edge = this.index.edge(edgeId);
      if (edge.generated.length === 0) {
        this.flash(
          edge.expanded
            ? "this edge generates no corners"
            : "this edge was not explored (depth limit)",
        );
      }
      this.state.toggleEdge(edgeId);
      this.render();
      return;
    }
    const cornerHit = target?.closest("[data-corner-id]");
    if (cornerHit) {
      const cornerId = Number(cornerHit.getAttribute("data-corner-id"));
      const corner = this.index.corner(cornerId);
      if (corner.edge_ids.length === 0) {
        this.flash(`${corner.display}: no edges`);
      }
      this.state.toggleCorner(cornerId);
      this.render();
    }
  }

  private flash(message: string): void {
    this.status.textContent = message;
  }

  private wirePanAndZoom(): void {
    this.svg.addEventListener("wheel", (event: WheelEvent) => {
      event.preventDefault();
      const factor = Math.exp(-event.deltaY / 250);
      const t = this.state.transform;
      t.x = event.offsetX - (event.offsetX - t.x) * factor;
      t.y = event.offsetY - (event.offsetY - t.y) * factor;
      t.scale *= factor;
      this.applyTransform();
      this.syncHash();
    });
    let dragging = false;
    let last = { x: 0, y: 0 };
    this.svg.addEventListener("mousedown", (event: MouseEvent) => {
      dragging = true;
      last = { x: event.clientX, y: event.clientY };
    });
    this.svg.addEventListener("mousemove", (event: MouseEvent) => {
      if (!dragging) return;
      this.state.transform.x += event.clientX - last.x;
      this.state.transform.y += event.clientY - last.y;
      last = { x: event.clientX, y: event.clientY };
      this.applyTransform();
    });
    for (const name of ["mouseup", "mouseleave"]) {
      this.svg.addEventListener(name, () => {
        if (dragging) {
          dragging = false;
          this.syncHash();
        }
      });
    }
  }

  private applyTransform(): void {
    const t = this.state.transform;
    this.view.setAttribute("transform", `translate(${t.x}, ${t.y}) scale(${t.scale})`);
  }

  render(): void {
    if (!this.index) return;
    const entities = visibleEntities(this.index, this.state);
    this.view.innerHTML = "";
    const maxX = Math.max(8, ...entities.corners.map((c) => Math.ceil(this.index!.x(c))));
    const maxY = Math.max(8, ...entities.corners.map((c) => c.b));
    this.view.appendChild(gridLines(maxX + 1, maxY + 1));
    const edgeLayer = document.createElementNS(SVG_NS, "g");
    edgeLayer.setAttribute("class", "edges");
    for (const edge of entities.edges) {
      edgeLayer.appendChild(edgeLine(this.index, edge));
    }
    this.view.appendChild(edgeLayer);
    const cornerLayer = document.createElementNS(SVG_NS, "g");
    cornerLayer.setAttribute("class", "corners");
    for (const corner of entities.corners) {
      cornerLayer.appendChild(cornerMarker(this.index, corner));
    }
    this.view.appendChild(cornerLayer);
    this.applyTransform();
    this.syncHash();
  }

  private syncHash(): void {
    const encoded = encodeState(this.state);
    if (typeof window !== "undefined" && window.history?.replaceState) {
      window.history.replaceState(null, "", `#${encoded}`);
    }
  }
}

export function mountExplorer(container: HTMLElement, index: DatasetIndex): ExplorerWidget {
  const widget = new ExplorerWidget(
    container,
    typeof window !== "undefined" ? window.location.hash : "",
  );
  widget.setDataset(index);
  return widget;
}
