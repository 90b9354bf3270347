/** Browser wiring: DOM events in, session calls out.  Everything testable
 * lives in the other modules; this file only binds them to a page. */

import { EvaluateClient } from "./api";
import { DEFAULT_THEME } from "./paint";
import { Session } from "./session";
import { frameFor, toCanvas } from "./transform";

const DEFAULT_ENDPOINT = "http://127.0.0.1:8039/evaluate";
const HIT_RADIUS = 12; // device px within which a handle grabs the pointer

const STARTER_PROGRAM = `A = point(0, 0)
B = point(4, 0)
C = point(1, 2)
T = triangle(A, B, C)
draw T [color=red]
iterate 10 {
  T = circumscribe(T, 20)
  draw T
}
`;

function element<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing #${id} in the page`);
  }
  return found as T;
}

function start(): void {
  const canvasEl = element<HTMLCanvasElement>("canvas");
  const programEl = element<HTMLTextAreaElement>("program");
  const endpointEl = element<HTMLInputElement>("endpoint");
  const angleEl = element<HTMLInputElement>("angle");
  const angleValueEl = element<HTMLElement>("angle-value");
  const bannerEl = element<HTMLElement>("banner");
  const retryEl = element<HTMLButtonElement>("retry");
  const diagnosticsEl = element<HTMLElement>("diagnostics");
  const runEl = element<HTMLButtonElement>("run");

  const ctx = canvasEl.getContext("2d");
  if (!ctx) {
    throw new Error("canvas 2d context unavailable");
  }
  const size = { width: canvasEl.width, height: canvasEl.height };

  programEl.value = STARTER_PROGRAM;
  endpointEl.value = DEFAULT_ENDPOINT;

  let session = newSession(programEl.value);

  function newSession(source: string): Session {
    const fresh = new Session(source, new EvaluateClient(endpointEl.value), {
      canvas: size,
      painter: ctx!,
      onPaint: refreshPanels,
    });
    void fresh.evaluateAndPaint().then(refreshPanels);
    return fresh;
  }

  function refreshPanels(): void {
    bannerEl.textContent = session.banner ?? "";
    bannerEl.parentElement!.classList.toggle("hidden", session.banner === null);
    diagnosticsEl.innerHTML = "";
    for (const d of session.diagnostics) {
      const item = document.createElement("li");
      item.textContent = `${d.line}:${d.column} ${d.message}`;
      diagnosticsEl.appendChild(item);
    }
    if (session.angleWarning) {
      const item = document.createElement("li");
      item.textContent = `angle: ${session.angleWarning}`;
      diagnosticsEl.appendChild(item);
    }
    const bound = session.angle !== null;
    angleEl.disabled = !bound;
    if (bound) {
      angleEl.min = String(session.angle!.range.min);
      angleEl.max = String(session.angle!.range.max);
      angleEl.value = String(session.angle!.value);
      angleValueEl.textContent = `${session.angle!.value}°`;
    } else {
      angleValueEl.textContent = "n/a";
    }
  }

  function pointerOf(event: MouseEvent): [number, number] {
    const rect = canvasEl.getBoundingClientRect();
    return [
      ((event.clientX - rect.left) * size.width) / rect.width,
      ((event.clientY - rect.top) * size.height) / rect.height,
    ];
  }

  function handleAt(pointer: [number, number]): string | null {
    if (!session.viewport || !session.lastResponse) {
      return null;
    }
    const frame = frameFor(session.viewport, size);
    let best: string | null = null;
    let bestDistance = HIT_RADIUS;
    for (const [name, x, y] of session.lastResponse.free_points) {
      const [px, py] = toCanvas(frame, x, y);
      const distance = Math.hypot(pointer[0] - px, pointer[1] - py);
      if (distance <= bestDistance) {
        best = name;
        bestDistance = distance;
      }
    }
    return best;
  }

  canvasEl.addEventListener("mousedown", (event) => {
    const pointer = pointerOf(event);
    const name = handleAt(pointer);
    if (name) {
      session.onDragStart(name, pointer);
      event.preventDefault();
    }
  });
  window.addEventListener("mousemove", (event) => {
    if (session.drag) {
      session.onDragMove(pointerOf(event));
    }
  });
  window.addEventListener("mouseup", () => session.onDragEnd());

  canvasEl.addEventListener("wheel", (event) => {
    event.preventDefault();
    session.onZoom(event.deltaY > 0 ? 1.25 : 0.8, pointerOf(event));
  });

  angleEl.addEventListener("input", () => {
    session.onAngleChange(Number(angleEl.value));
    angleValueEl.textContent = `${angleEl.value}°`;
    void session.idle().then(refreshPanels);
  });

  retryEl.addEventListener("click", () => {
    void session.evaluateAndPaint().then(refreshPanels);
  });

  runEl.addEventListener("click", () => {
    session = newSession(programEl.value);
  });

  // theme swatches double as a legend for the palette names
  const legend = element<HTMLElement>("legend");
  for (const [name, value] of Object.entries(DEFAULT_THEME.palette)) {
    const chip = document.createElement("span");
    chip.className = "chip";
    chip.style.background = value;
    chip.title = name;
    legend.appendChild(chip);
  }
}

start();
