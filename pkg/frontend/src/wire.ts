/** JSON shapes exchanged with the evaluate endpoint (schema version 1).
 *
 * These mirror the engine's wire format exactly; the explorer never invents
 * geometry of its own, so every coordinate type here originates server-side.
 */

export const SCHEMA_VERSION = 1;

export interface WireStyle {
  color: string;
  stroke: number;
  layer: number;
}

export interface PointMark {
  kind: "point";
  x: number;
  y: number;
  style: WireStyle;
  name: string | null;
}

export interface SegmentMark {
  kind: "segment";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  style: WireStyle;
  name: string | null;
}

/** An unbounded line carried by two distinct points on it. */
export interface LineMark {
  kind: "line";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  style: WireStyle;
  name: string | null;
}

export interface CircleMark {
  kind: "circle";
  cx: number;
  cy: number;
  r: number;
  style: WireStyle;
  name: string | null;
}

export interface PolygonMark {
  kind: "polygon";
  points: [number, number][];
  style: WireStyle;
  name: string | null;
}

export interface LabelMark {
  kind: "label";
  x: number;
  y: number;
  text: string;
  style: WireStyle;
  name: string | null;
}

export type Primitive =
  | PointMark
  | SegmentMark
  | LineMark
  | CircleMark
  | PolygonMark
  | LabelMark;

export interface WireScene {
  primitives: Primitive[];
  spiral_center: [number, number] | null;
}

export interface Viewport {
  center: [number, number];
  half_extent: number;
  aspect: number;
}

export interface Diagnostic {
  line: number;
  column: number;
  message: string;
  severity: string;
}

/** [name, x, y] of a draggable input point, at its current (possibly
 * overridden) position. */
export type FreePoint = [string, number, number];

export interface EvaluateRequest {
  source: string;
  overrides?: Record<string, [number, number]>;
  viewport?: Viewport;
  schema?: number;
}

export interface EvaluateResponse {
  schema: number;
  scene: WireScene;
  free_points: FreePoint[];
  diagnostics: Diagnostic[];
  fitted_viewport: Viewport;
}
