/** Full-scene canvas painting.
 *
 * Every painted coordinate is an engine-supplied scene coordinate pushed
 * through the frame's affine map — the painter adds no geometry of its own
 * beyond extending unbounded lines past the canvas edge.  Scenes here are
 * tens to hundreds of primitives, so each response repaints from scratch.
 */

import { toCanvas, type Frame } from "./transform";
import type { FreePoint, Primitive, WireScene } from "./wire";

/** The slice of CanvasRenderingContext2D the painter touches.  A real 2D
 * context satisfies it structurally; tests use a recording stub.  The style
 * properties carry the DOM's union type, but the painter only ever assigns
 * plain color strings. */
export interface Painter2D {
  lineWidth: number;
  strokeStyle: string | object;
  fillStyle: string | object;
  font: string;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, radius: number, startAngle: number, endAngle: number): void;
  closePath(): void;
  stroke(): void;
  fill(): void;
  fillText(text: string, x: number, y: number): void;
  fillRect(x: number, y: number, w: number, h: number): void;
  clearRect(x: number, y: number, w: number, h: number): void;
}

export interface PaintTheme {
  /** Geometry units of line width per unit of a primitive's stroke. */
  strokeWidth: number;
  /** Dot radius as a fraction of canvas height (constant apparent size). */
  pointRadius: number;
  /** Label font size as a fraction of canvas height. */
  labelFontSize: number;
  /** Drag-handle ring radius in device px. */
  handleRadius: number;
  palette: Record<string, string>;
  background: string | null;
  handleColor: string;
}

export const DEFAULT_THEME: PaintTheme = {
  strokeWidth: 0.02,
  pointRadius: 0.008,
  labelFontSize: 0.03,
  handleRadius: 6,
  palette: {
    black: "#1a1a1a",
    blue: "#1f77b4",
    green: "#2ca02c",
    red: "#d62728",
  },
  background: "#ffffff",
  handleColor: "#e8710a",
};

function colorOf(theme: PaintTheme, name: string): string {
  return theme.palette[name] ?? name;
}

export function clearCanvas(ctx: Painter2D, frame: Frame, theme: PaintTheme): void {
  ctx.clearRect(0, 0, frame.width, frame.height);
  if (theme.background !== null) {
    ctx.fillStyle = theme.background;
    ctx.fillRect(0, 0, frame.width, frame.height);
  }
}

/** Paint the scene's primitives in ascending layer order (stable within a
 * layer).  Returns the number painted — always the primitive count. */
export function paintScene(
  ctx: Painter2D,
  scene: WireScene,
  frame: Frame,
  theme: PaintTheme = DEFAULT_THEME,
): number {
  const ordered = [...scene.primitives].sort((a, b) => a.style.layer - b.style.layer);
  for (const primitive of ordered) {
    paintPrimitive(ctx, primitive, frame, theme);
  }
  return ordered.length;
}

function paintPrimitive(
  ctx: Painter2D,
  primitive: Primitive,
  frame: Frame,
  theme: PaintTheme,
): void {
  const color = colorOf(theme, primitive.style.color);
  ctx.lineWidth = primitive.style.stroke * theme.strokeWidth * frame.scale;
  ctx.strokeStyle = color;
  ctx.fillStyle = color;
  switch (primitive.kind) {
    case "point": {
      const [px, py] = toCanvas(frame, primitive.x, primitive.y);
      ctx.beginPath();
      ctx.arc(px, py, theme.pointRadius * frame.height, 0, 2 * Math.PI);
      ctx.fill();
      break;
    }
    case "segment": {
      const [ax, ay] = toCanvas(frame, primitive.x1, primitive.y1);
      const [bx, by] = toCanvas(frame, primitive.x2, primitive.y2);
      ctx.beginPath();
      ctx.moveTo(ax, ay);
      ctx.lineTo(bx, by);
      ctx.stroke();
      break;
    }
    case "line": {
      // extend through the two carrier points far past the canvas edge
      const [ax, ay] = toCanvas(frame, primitive.x1, primitive.y1);
      const [bx, by] = toCanvas(frame, primitive.x2, primitive.y2);
      const length = Math.hypot(bx - ax, by - ay);
      const reach = 3 * Math.hypot(frame.width, frame.height);
      const ux = (bx - ax) / length;
      const uy = (by - ay) / length;
      ctx.beginPath();
      ctx.moveTo(ax - ux * reach, ay - uy * reach);
      ctx.lineTo(ax + ux * reach, ay + uy * reach);
      ctx.stroke();
      break;
    }
    case "circle": {
      const [px, py] = toCanvas(frame, primitive.cx, primitive.cy);
      ctx.beginPath();
      ctx.arc(px, py, primitive.r * frame.scale, 0, 2 * Math.PI);
      ctx.stroke();
      break;
    }
    case "polygon": {
      ctx.beginPath();
      primitive.points.forEach(([x, y], index) => {
        const [px, py] = toCanvas(frame, x, y);
        if (index === 0) {
          ctx.moveTo(px, py);
        } else {
          ctx.lineTo(px, py);
        }
      });
      ctx.closePath();
      ctx.stroke();
      break;
    }
    case "label": {
      const [px, py] = toCanvas(frame, primitive.x, primitive.y);
      ctx.font = `${theme.labelFontSize * frame.height}px sans-serif`;
      ctx.fillText(primitive.text, px, py);
      break;
    }
  }
}

/** Ring markers over the draggable input points.  Returns how many. */
export function paintHandles(
  ctx: Painter2D,
  freePoints: FreePoint[],
  frame: Frame,
  theme: PaintTheme = DEFAULT_THEME,
): number {
  ctx.lineWidth = 2;
  ctx.strokeStyle = theme.handleColor;
  for (const [, x, y] of freePoints) {
    const [px, py] = toCanvas(frame, x, y);
    ctx.beginPath();
    ctx.arc(px, py, theme.handleRadius, 0, 2 * Math.PI);
    ctx.stroke();
  }
  return freePoints.length;
}
