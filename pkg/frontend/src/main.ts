import { loadDataset } from "./dataset.js";
import { ExplorerWidget } from "./widget.js";

const DEFAULT_DATASET = "fixtures/dataset-m35.json";

function datasetUrl(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("data") ?? DEFAULT_DATASET;
}

window.addEventListener("DOMContentLoaded", () => {
  const container = document.getElementById("explorer");
  if (!container) return;
  const widget = new ExplorerWidget(container, window.location.hash);
  void widget.load(datasetUrl(), loadDataset);
});
