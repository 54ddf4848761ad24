/**
 * DOM wiring for the explorer page: construction picker, one slider per
 * parameter, mover slider, display toggles, equation panel, and status bar.
 * Every algebraic string on the page is verbatim service output.
 */

import { DEBOUNCE_MS, ExplorerClient, type SceneResult } from "./api.js";
import {
  clampBinding,
  defaultState,
  fromQuery,
  SAMPLE_HI,
  SAMPLE_LO,
  snapMover,
  toQuery,
  type ExplorerState,
} from "./state.js";
import { analysisSummary, moverOverlay, typesetEquation } from "./render.js";
import type { CatalogResponse, ConstructionInfo } from "./types.js";

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (el === null) throw new Error(`missing element #${id}`);
  return el as T;
};

let catalog: ConstructionInfo[] = [];
let state: ExplorerState;
let lastGood: SceneResult | null = null;
const client = new ExplorerClient("");

function info(name: string): ConstructionInfo {
  const found = catalog.find((c) => c.name === name);
  if (found === undefined) throw new Error(`unknown construction ${name}`);
  return found;
}

function syncUrl(): void {
  history.replaceState(null, "", `?${toQuery(state)}`);
}

function setStatus(text: string, isError = false): void {
  const bar = $("status");
  bar.textContent = text;
  bar.classList.toggle("error", isError);
}

function buildSliders(): void {
  const host = $("sliders");
  host.textContent = "";
  for (const spec of info(state.construction).params) {
    const row = document.createElement("label");
    row.className = "slider-row";
    const title = document.createElement("span");
    const value = state.bindings[spec.name] ?? spec.default;
    title.textContent = `${spec.name} = ${value}`;
    const input = document.createElement("input");
    input.type = "range";
    input.min = String(spec.min);
    input.max = String(spec.max);
    input.step = "0.01";
    input.value = String(value);
    input.addEventListener("input", () => {
      const v = clampBinding(spec, Number(input.value));
      state.bindings[spec.name] = v;
      title.textContent = `${spec.name} = ${v}`;
      syncUrl();
      client.scheduleLocus(state);
    });
    row.append(title, input);
    host.append(row);
  }
}

function drawOverlay(): void {
  if (lastGood === null) return;
  const svgRoot = $("plot").querySelector("svg");
  if (svgRoot === null) return;
  svgRoot.querySelector("#mover-overlay")?.remove();
  const snapped = snapMover(state.mover, lastGood.locus.samples);
  const sample = lastGood.locus.samples.find(([t]) => t === snapped.value);
  if (sample === undefined) return;
  const group = document.createElementNS("http://www.w3.org/2000/svg", "g");
  group.id = "mover-overlay";
  group.innerHTML = moverOverlay(
    lastGood.locus.scene,
    sample,
    state.toggles.constructionLines,
  );
  svgRoot.append(group);
  if (snapped.gap) {
    setStatus(
      `mover snapped to ${snapped.value.toFixed(3)} — requested value is excluded (gap in the trace)`,
    );
  }
}

function showResult(result: SceneResult, forState: ExplorerState): void {
  lastGood = result;
  // the service emits a standalone SVG document; drop the XML prolog for inline use
  $("plot").innerHTML = result.svg.replace(/^<\?xml[^>]*\?>\s*/, "");
  $<HTMLPreElement>("equation-text").textContent = result.locus.implicit;
  $("equation-typeset").innerHTML = typesetEquation(result.locus.implicit);
  const summary = analysisSummary(result.locus.analysis);
  state.lastAnalysis = summary;
  const exclusions = result.locus.exclusions.length
    ? ` | excluded: ${result.locus.exclusions.join("; ")}`
    : "";
  setStatus(`${summary}${exclusions}`);
  $("equation").hidden = !forState.toggles.equationPanel;
  drawOverlay();
}

function buildToggles(): void {
  const wire = (id: string, key: keyof ExplorerState["toggles"]) => {
    const box = $<HTMLInputElement>(id);
    box.checked = state.toggles[key];
    box.addEventListener("change", () => {
      state.toggles[key] = box.checked;
      syncUrl();
      if (key === "equationPanel") {
        $("equation").hidden = !box.checked;
      } else if (key === "constructionLines") {
        drawOverlay();
      } else {
        client.scheduleLocus(state); // contour layers are rendered server-side
      }
    });
  };
  wire("toggle-lines", "constructionLines");
  wire("toggle-contour", "implicitContour");
  wire("toggle-equation", "equationPanel");
}

function buildMover(): void {
  const input = $<HTMLInputElement>("mover");
  input.min = String(SAMPLE_LO);
  input.max = String(SAMPLE_HI);
  input.step = "0.01";
  input.value = String(state.mover);
  input.addEventListener("input", () => {
    const snapped = snapMover(Number(input.value), lastGood?.locus.samples ?? []);
    state.mover = snapped.value;
    syncUrl();
    drawOverlay();
  });
}

function switchConstruction(name: string): void {
  const toggles = state.toggles;
  state = defaultState(info(name));
  state.toggles = toggles;
  buildSliders();
  syncUrl();
  client.submit(state);
}

async function init(): Promise<void> {
  const cat = (await client.getCatalog()) as CatalogResponse;
  catalog = cat.constructions;
  const picker = $<HTMLSelectElement>("construction");
  for (const c of catalog) {
    const opt = document.createElement("option");
    opt.value = c.name;
    opt.textContent = c.name;
    picker.append(opt);
  }
  const first = catalog[0];
  if (first === undefined) throw new Error("catalog is empty");
  state = fromQuery(location.search.replace(/^\?/, ""), catalog) ?? defaultState(first);
  picker.value = state.construction;
  picker.addEventListener("change", () => switchConstruction(picker.value));

  client.onResult = showResult;
  client.onError = (message) => setStatus(message, true); // last-good scene stays up

  buildSliders();
  buildToggles();
  buildMover();
  syncUrl();
  client.submit(state);
  setStatus(`loading… (updates debounce at ${DEBOUNCE_MS} ms)`);
}

init().catch((err) => setStatus(err instanceof Error ? err.message : String(err), true));
