import { describe, expect, it } from "vitest";

import { clearCanvas, paintHandles, paintScene, DEFAULT_THEME } from "../src/paint";
import { frameFor } from "../src/transform";
import type { FreePoint, Primitive,WireScene, WireStyle } from "../src/wire";
import { RecordingPainter } from "./recording";

const FRAME = frameFor({ center: [0, 0], half_extent: 2, aspect: 1 }, { width: 800, height: 800 });
// scale = 200 px per unit; geometry (0,0) paints at (400,400)

function styled(color: string, layer = 0, stroke = 1): WireStyle {
  return { color, stroke, layer };
}

const SCENE: WireScene = {
  primitives: [
    { kind: "polygon", points: [[0, 0], [1, 0], [0, 1]], style: styled("red", 1), name: "T" },
    { kind: "point", x: 0, y: 0, style: styled("black"), name: "A" },
    { kind: "segment", x1: 0, y1: 0, x2: 1, y2: 0, style: styled("blue"), name: null },
    { kind: "circle", cx: 0, cy: 0, r: 0.5, style: styled("green", 2), name: null },
    { kind: "label", x: 1, y: 1, text: "spiral", style: styled("black", 3), name: null },
    { kind: "line", x1: -1, y1: -1, x2: 1, y2: 1, style: styled("gray"), name: null },
  ],
  spiral_center: null,
};

describe("paintScene", () => {
  it("paints one element per primitive and returns the count", () => {
    const ctx = new RecordingPainter();
    const painted = paintScene(ctx, SCENE, FRAME);
    expect(painted).toBe(SCENE.primitives.length);
    expect(ctx.elementCount()).toBe(SCENE.primitives.length);
  });

  it("paints in ascending layer order, stable within a layer", () => {
    const ctx = new RecordingPainter();
    paintScene(ctx, SCENE, FRAME);
    const colors = ctx.ops
      .filter(([op]) => op === "stroke" || op === "fill" || op === "fillText")
      .map((op) => (op[0] === "fillText" ? op[4] : op[1]));
    // layer 0 first (point, segment, line in insertion order), then 1, 2, 3
    expect(colors).toEqual([
      DEFAULT_THEME.palette.black,
      DEFAULT_THEME.palette.blue,
      "gray",
      DEFAULT_THEME.palette.red,
      DEFAULT_THEME.palette.green,
      DEFAULT_THEME.palette.black,
    ]);
  });

  it("does not mutate the scene's primitive order", () => {
    const ctx = new RecordingPainter();
    const before = [...SCENE.primitives];
    paintScene(ctx, SCENE, FRAME);
    expect(SCENE.primitives).toEqual(before);
  });

  it("maps point coordinates through the frame and sizes dots by canvas height", () => {
    const ctx = new RecordingPainter();
    const scene: WireScene = {
      primitives: [{ kind: "point", x: 1, y: 1, style: styled("black"), name: null }],
      spiral_center: null,
    };
    paintScene(ctx, scene, FRAME);
    const arc = ctx.ops.find(([op]) => op === "arc")!;
    expect(arc[1]).toBe(600); // (1 - (-2)) * 200
    expect(arc[2]).toBe(200); // (2 - 1) * 200
    expect(arc[3]).toBe(DEFAULT_THEME.pointRadius * 800);
  });

  it("scales circle radii by the frame scale", () => {
    const ctx = new RecordingPainter();
    const scene: WireScene = {
      primitives: [{ kind: "circle", cx: 0, cy: 0, r: 0.5, style: styled("green"), name: null }],
      spiral_center: null,
    };
    paintScene(ctx, scene, FRAME);
    const arc = ctx.ops.find(([op]) => op === "arc")!;
    expect(arc[3]).toBe(100); // 0.5 units * 200 px/unit
  });

  it("extends an unbounded line well past the canvas", () => {
    const ctx = new RecordingPainter();
    const scene: WireScene = {
      primitives: [{ kind: "line", x1: 0, y1: 0, x2: 1, y2: 0, style: styled("black"), name: null }],
      spiral_center: null,
    };
    paintScene(ctx, scene, FRAME);
    const move = ctx.ops.find(([op]) => op === "moveTo")!;
    const line = ctx.ops.find(([op]) => op === "lineTo")!;
    const span = Math.hypot((line[1] as number) - (move[1] as number), (line[2] as number) - (move[2] as number));
    expect(span).toBeGreaterThan(6 * Math.hypot(800, 800) - 1);
  });

  it("derives stroke width from the primitive's stroke and the frame scale", () => {
    const ctx = new RecordingPainter();
    const scene: WireScene = {
      primitives: [
        { kind: "segment", x1: 0, y1: 0, x2: 1, y2: 0, style: styled("blue", 0, 2.5), name: null },
      ],
      spiral_center: null,
    };
    paintScene(ctx, scene, FRAME);
    const stroke = ctx.ops.find(([op]) => op === "stroke")!;
    expect(stroke[2]).toBeCloseTo(2.5 * DEFAULT_THEME.strokeWidth * FRAME.scale, 12);
  });

  it("passes unknown color names through untouched", () => {
    const ctx = new RecordingPainter();
    const scene: WireScene = {
      primitives: [{ kind: "segment", x1: 0, y1: 0, x2: 1, y2: 0, style: styled("#123456"), name: null }],
      spiral_center: null,
    };
    paintScene(ctx, scene, FRAME);
    const stroke = ctx.ops.find(([op]) => op === "stroke")!;
    expect(stroke[1]).toBe("#123456");
  });
});

describe("clearCanvas", () => {
  it("clears and then lays the background", () => {
    const ctx = new RecordingPainter();
    clearCanvas(ctx, FRAME, DEFAULT_THEME);
    expect(ctx.ops[0]).toEqual(["clearRect", 0, 0, 800, 800]);
    expect(ctx.ops[1]).toEqual(["fillRect", 0, 0, 800, 800, DEFAULT_THEME.background]);
  });

  it("skips the background when the theme has none", () => {
    const ctx = new RecordingPainter();
    clearCanvas(ctx, FRAME, { ...DEFAULT_THEME, background: null });
    expect(ctx.ops).toEqual([["clearRect", 0, 0, 800, 800]]);
  });
});

describe("paintHandles", () => {
  it("rings every free point at its canvas position", () => {
    const ctx = new RecordingPainter();
    const free: FreePoint[] = [["A", 0, 0], ["B", 1, 0], ["C", -1, 1]];
    const count = paintHandles(ctx, free, FRAME);
    expect(count).toBe(3);
    const arcs = ctx.ops.filter(([op]) => op === "arc");
    expect(arcs).toHaveLength(3);
    expect(arcs[0]!.slice(1, 3)).toEqual([400, 400]);
    expect(arcs[1]!.slice(1, 3)).toEqual([600, 400]);
    expect(arcs[2]!.slice(1, 3)).toEqual([200, 200]);
    expect(arcs[0]![3]).toBe(DEFAULT_THEME.handleRadius);
  });
});
