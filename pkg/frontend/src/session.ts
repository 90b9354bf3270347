/** The explorer's state machine: one construction program, its overridden
 * input points, a viewport, and the most recent engine response.
 *
 * All geometry lives server-side; the session only splices program text,
 * converts pointer positions through the viewport transform, and repaints
 * whatever scene the engine last returned.  Requests flow through a
 * latest-wins queue so a drag can outpace the network without request
 * storms or stale frames.
 */

import type { Evaluator } from "./api";
import { bindAngleControl, setAngle, type AngleControl } from "./angle";
import {
  clearCanvas,
  paintHandles,
  paintScene,
  DEFAULT_THEME,
  type Painter2D,
  type PaintTheme,
} from "./paint";
import { LatestWins } from "./throttle";
import {
  frameFor,
  toCanvas,
  toGeometry,
  zoomViewport,
  DEFAULT_ZOOM_LIMITS,
  type CanvasSize,
  type Frame,
  type ZoomLimits,
} from "./transform";
import type { Diagnostic, EvaluateRequest, EvaluateResponse, Viewport } from "./wire";

type Origin = "load" | "drag" | "angle";

interface Job {
  request: EvaluateRequest;
  origin: Origin;
}

export interface SessionOptions {
  canvas: CanvasSize;
  painter: Painter2D;
  theme?: PaintTheme;
  zoomLimits?: ZoomLimits;
  /** Called after every repaint with what landed on the canvas. */
  onPaint?: (info: { painted: number; handles: number }) => void;
}

export class Session {
  source: string;
  readonly overrides = new Map<string, [number, number]>();
  /** Pinned from the first response's fit; zooming moves it afterwards. */
  viewport: Viewport | null = null;
  lastResponse: EvaluateResponse | null = null;
  drag: { name: string; grabOffset: [number, number] } | null = null;
  /** Transport failure message, or null when the engine is answering. */
  banner: string | null = null;
  angle: AngleControl | null;
  /** Message for a slider position the engine flagged as degenerate. */
  angleWarning: string | null = null;
  paintedCount = 0;
  handleCount = 0;

  private readonly theme: PaintTheme;
  private readonly zoomLimits: ZoomLimits;
  private readonly queue = new LatestWins<Job>((job) => this.dispatch(job));
  /** Most recent response free of error diagnostics. */
  private lastGood: EvaluateResponse | null = null;
  /** The response currently on the canvas (repainted verbatim on zoom). */
  private painted: EvaluateResponse | null = null;

  constructor(
    source: string,
    private readonly evaluator: Evaluator,
    private readonly options: SessionOptions,
  ) {
    this.source = source;
    this.angle = bindAngleControl(source);
    this.theme = options.theme ?? DEFAULT_THEME;
    this.zoomLimits = options.zoomLimits ?? DEFAULT_ZOOM_LIMITS;
  }

  get diagnostics(): Diagnostic[] {
    return this.lastResponse?.diagnostics ?? [];
  }

  /** Evaluate the current source and overrides, then repaint.  The returned
   * promise settles when the queue drains, so it also serves as a retry
   * for a transport banner. */
  evaluateAndPaint(): Promise<void> {
    this.enqueue("load");
    return this.queue.idle();
  }

  /** Settles once no request is in flight or pending. */
  idle(): Promise<void> {
    return this.queue.idle();
  }

  /** Begin dragging a free point; `pointer` is where it was grabbed, in
   * device px, so the point does not jump to the cursor's hot spot. */
  onDragStart(name: string, pointer: [number, number]): void {
    const frame = this.frame();
    const point = this.lastResponse?.free_points.find(([n]) => n === name);
    if (!frame || !point) {
      return;
    }
    const [px, py] = toCanvas(frame, point[1], point[2]);
    this.drag = { name, grabOffset: [pointer[0] - px, pointer[1] - py] };
  }

  onDragMove(pointer: [number, number]): void {
    const frame = this.frame();
    if (!this.drag || !frame) {
      return;
    }
    const px = clamp(pointer[0], 0, frame.width) - this.drag.grabOffset[0];
    const py = clamp(pointer[1], 0, frame.height) - this.drag.grabOffset[1];
    this.overrides.set(this.drag.name, toGeometry(frame, px, py));
    this.enqueue("drag");
  }

  onDragEnd(): void {
    this.drag = null;
  }

  onAngleChange(degrees: number): void {
    if (!this.angle) {
      return;
    }
    const spliced = setAngle(this.source, this.angle, degrees);
    this.source = spliced.source;
    this.angle = spliced.control;
    this.enqueue("angle");
  }

  /** Pure viewport change: scale the half-extent by `factor` about the
   * geometry point under `anchor` and repaint the held scene.  No request
   * is issued — the scene itself is unaffected by zooming. */
  onZoom(factor: number, anchor: [number, number]): void {
    if (!this.viewport) {
      return;
    }
    const next = zoomViewport(
      this.viewport,
      factor,
      anchor,
      this.options.canvas,
      this.zoomLimits,
    );
    if (next === this.viewport) {
      return;
    }
    this.viewport = next;
    if (this.painted) {
      this.repaint(this.painted);
    }
  }

  private frame(): Frame | null {
    return this.viewport ? frameFor(this.viewport, this.options.canvas) : null;
  }

  private enqueue(origin: Origin): void {
    const request: EvaluateRequest = { source: this.source };
    if (this.overrides.size > 0) {
      request.overrides = Object.fromEntries(this.overrides);
    }
    this.queue.push({ request, origin });
  }

  private async dispatch(job: Job): Promise<void> {
    let response: EvaluateResponse;
    try {
      response = await this.evaluator.evaluate(job.request);
    } catch (error) {
      // keep the last painted scene; the banner offers a retry
      this.banner = error instanceof Error ? error.message : String(error);
      return;
    }
    this.banner = null;
    this.apply(response, job.origin);
  }

  private apply(response: EvaluateResponse, origin: Origin): void {
    const failed = response.diagnostics.some((d) => d.severity === "error");
    if (origin === "angle") {
      if (failed && this.lastGood) {
        // a degenerate slider position warns but keeps the last good picture
        this.angleWarning =
          response.diagnostics.find((d) => d.severity === "error")?.message ??
          "degenerate angle";
        this.lastResponse = response;
        return;
      }
      this.angleWarning = null;
    }
    this.lastResponse = response;
    if (!failed) {
      this.lastGood = response;
    }
    if (!this.viewport) {
      this.viewport = response.fitted_viewport;
    }
    for (const name of [...this.overrides.keys()]) {
      if (!response.free_points.some(([n]) => n === name)) {
        this.overrides.delete(name);
      }
    }
    this.repaint(response);
  }

  private repaint(response: EvaluateResponse): void {
    const frame = this.frame();
    if (!frame) {
      return;
    }
    const ctx = this.options.painter;
    clearCanvas(ctx, frame, this.theme);
    this.paintedCount = paintScene(ctx, response.scene, frame, this.theme);
    this.handleCount = paintHandles(ctx, response.free_points, frame, this.theme);
    this.painted = response;
    this.options.onPaint?.({ painted: this.paintedCount, handles: this.handleCount });
  }
}

function clamp(value: number, low: number, high: number): number {
  return Math.min(high, Math.max(low, value));
}
