/** The one place geometry coordinates and canvas pixels meet.
 *
 * Geometry is y-up, the canvas is y-down.  A viewport pins the vertical
 * scale — half_extent is half the visible height in geometry units — and
 * the horizontal extent follows from the canvas's own width/height ratio,
 * so the mapping is always uniform (circles stay round).  Everything else
 * in the explorer goes through these few functions; no other module does
 * coordinate arithmetic.
 */

import type { Viewport } from "./wire";

export interface CanvasSize {
  width: number;
  height: number;
}

/** A resolved affine map between geometry space and one canvas. */
export interface Frame {
  scale: number; // device pixels per geometry unit
  xMin: number; // geometry x at the canvas's left edge
  yMax: number; // geometry y at the canvas's top edge
  width: number; // canvas width, device px
  height: number; // canvas height, device px
}

export function frameFor(viewport: Viewport, canvas: CanvasSize): Frame {
  const scale = canvas.height / (2 * viewport.half_extent);
  const halfWidth = canvas.width / (2 * scale);
  return {
    scale,
    xMin: viewport.center[0] - halfWidth,
    yMax: viewport.center[1] + viewport.half_extent,
    width: canvas.width,
    height: canvas.height,
  };
}

export function toCanvas(frame: Frame, x: number, y: number): [number, number] {
  return [(x - frame.xMin) * frame.scale, (frame.yMax - y) * frame.scale];
}

export function toGeometry(frame: Frame, px: number, py: number): [number, number] {
  return [frame.xMin + px / frame.scale, frame.yMax - py / frame.scale];
}

export interface ZoomLimits {
  minHalf: number;
  maxHalf: number;
}

export const DEFAULT_ZOOM_LIMITS: ZoomLimits = { minHalf: 1e-6, maxHalf: 1e6 };

/** Scale the viewport's half-extent by `factor` (< 1 zooms in, > 1 zooms
 * out) while the geometry point under `anchor` stays exactly under it.
 * A factor of 1 — including a clamped factor that lands back on the current
 * half-extent — returns the viewport unchanged. */
export function zoomViewport(
  viewport: Viewport,
  factor: number,
  anchor: [number, number],
  canvas: CanvasSize,
  limits: ZoomLimits = DEFAULT_ZOOM_LIMITS,
): Viewport {
  if (!Number.isFinite(factor) || factor <= 0) {
    throw new RangeError(`zoom factor must be a positive number, got ${factor}`);
  }
  const half = Math.min(
    limits.maxHalf,
    Math.max(limits.minHalf, viewport.half_extent * factor),
  );
  const applied = half / viewport.half_extent;
  if (applied === 1) {
    return viewport;
  }
  const frame = frameFor(viewport, canvas);
  const [gx, gy] = toGeometry(frame, anchor[0], anchor[1]);
  return {
    center: [
      gx - (gx - viewport.center[0]) * applied,
      gy - (gy - viewport.center[1]) * applied,
    ],
    half_extent: half,
    aspect: viewport.aspect,
  };
}
