/** End-to-end checks against the real engine: each test drives the explorer
 * exactly as a browser session would, over HTTP to a freshly spawned
 * `trigonlab serve` on an ephemeral port. */

import { spawn, type ChildProcessByStdio } from "node:child_process";
import { readFileSync } from "node:fs";
import path from "node:path";
import type { Readable } from "node:stream";
import { fileURLToPath } from "node:url";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { EvaluateClient } from "../src/api";
import { clearCanvas, paintHandles, paintScene, DEFAULT_THEME } from "../src/paint";
import { Session } from "../src/session";
import { frameFor, toCanvas, type CanvasSize } from "../src/transform";
import type { EvaluateRequest } from "../src/wire";
import { RecordingPainter } from "./recording";

const CANVAS: CanvasSize = { width: 800, height: 800 };

const corpusDir = path.resolve(
  path.dirname(fileURLToPath(import.meta.url)),
  "../../src/trigonlab/corpus",
);
const corpus = (name: string) => readFileSync(path.join(corpusDir, `${name}.geo`), "utf8");

let engine: ChildProcessByStdio<null, Readable, Readable>;
let endpoint: string;

beforeAll(async () => {
  engine = spawn("trigonlab", ["serve", "--port", "0"], {
    stdio: ["ignore", "pipe", "pipe"],
  });
  endpoint = await new Promise<string>((resolve, reject) => {
    const timer = setTimeout(
      () => reject(new Error("engine never announced its endpoint")),
      15000,
    );
    let banner = "";
    engine.stdout.on("data", (chunk: Buffer) => {
      banner += chunk.toString();
      const hit = banner.match(/evaluate endpoint on (\S+)/);
      if (hit) {
        clearTimeout(timer);
        resolve(hit[1]!);
      }
    });
    engine.on("error", reject);
    engine.on("exit", (code) => reject(new Error(`engine exited early (${code})`)));
  });
});

afterAll(() => {
  engine?.kill();
});

/** Wraps the real client so tests can count and inspect traffic. */
class CountingClient {
  readonly requests: EvaluateRequest[] = [];
  private readonly inner: EvaluateClient;

  constructor() {
    this.inner = new EvaluateClient(endpoint);
  }

  evaluate(request: EvaluateRequest) {
    this.requests.push(request);
    return this.inner.evaluate(request);
  }
}

describe("loading a corpus program", () => {
  it("paints two polygons and three drag handles for the medial construction", async () => {
    const painter = new RecordingPainter();
    const session = new Session(corpus("fig1"), new CountingClient(), {
      canvas: CANVAS,
      painter,
    });
    await session.evaluateAndPaint();
    expect(session.banner).toBeNull();
    expect(session.diagnostics).toEqual([]);
    expect(session.paintedCount).toBe(2);
    expect(session.handleCount).toBe(3);
    expect(painter.elementCount()).toBe(5);
    expect(session.lastResponse!.free_points.map(([n]) => n).sort()).toEqual(["A", "B", "C"]);
  });

  it("always paints exactly as many elements as the scene has primitives", async () => {
    for (const name of ["fig2", "fig7", "fig11"]) {
      const painter = new RecordingPainter();
      const session = new Session(corpus(name), new CountingClient(), {
        canvas: CANVAS,
        painter,
      });
      await session.evaluateAndPaint();
      expect(session.paintedCount).toBe(session.lastResponse!.scene.primitives.length);
      expect(painter.elementCount()).toBe(session.paintedCount + session.handleCount);
    }
  });
});

describe("drag loop", () => {
  it("a drag burst lands on the same scene as a direct evaluation with that override", async () => {
    const client = new CountingClient();
    const painter = new RecordingPainter();
    const session = new Session(corpus("fig2"), client, { canvas: CANVAS, painter });
    await session.evaluateAndPaint();

    const frame = frameFor(session.viewport!, CANVAS);
    const a = session.lastResponse!.free_points.find(([n]) => n === "A")!;
    const grabbed = toCanvas(frame, a[1], a[2]);
    session.onDragStart("A", grabbed);
    for (let step = 1; step <= 6; step++) {
      session.onDragMove([grabbed[0] + step * 14, grabbed[1] - step * 9]);
    }
    session.onDragEnd();
    await session.idle();

    const finalOverride = session.overrides.get("A")!;
    const direct = await new EvaluateClient(endpoint).evaluate({
      source: corpus("fig2"),
      overrides: { A: finalOverride },
    });

    // primitive-for-primitive: the painted response is the direct response
    expect(session.lastResponse!.scene.primitives).toEqual(direct.scene.primitives);
    expect(session.lastResponse!.scene.spiral_center).toEqual(direct.scene.spiral_center);
    expect(session.lastResponse!.free_points).toEqual(direct.free_points);

    // and the canvas holds exactly the paint of that scene in this viewport
    const expected = new RecordingPainter();
    clearCanvas(expected, frame, DEFAULT_THEME);
    paintScene(expected, direct.scene, frame, DEFAULT_THEME);
    paintHandles(expected, direct.free_points, frame, DEFAULT_THEME);
    expect(painter.currentFrame()).toEqual(expected.currentFrame());

    // the burst was throttled: load + first move + coalesced newest
    expect(client.requests.length).toBeLessThanOrEqual(3);
    // and every nested triangle followed the drag
    expect(session.lastResponse!.scene.primitives).toHaveLength(9);
  });
});

describe("angle slider", () => {
  it("moves the spiral's convergence point less than 2 px between 10 and 25 degrees", async () => {
    const painter = new RecordingPainter();
    const session = new Session(corpus("fig7"), new CountingClient(), {
      canvas: CANVAS,
      painter,
    });
    await session.evaluateAndPaint();
    expect(session.angle).not.toBeNull();
    expect(session.angle!.value).toBe(20);
    const frame = frameFor(session.viewport!, CANVAS); // pinned across slides

    session.onAngleChange(10);
    await session.idle();
    expect(session.diagnostics).toEqual([]);
    const scene10 = session.lastResponse!.scene;
    const at10 = toCanvas(frame, ...scene10.spiral_center!);

    session.onAngleChange(25);
    await session.idle();
    expect(session.diagnostics).toEqual([]);
    const scene25 = session.lastResponse!.scene;
    const at25 = toCanvas(frame, ...scene25.spiral_center!);

    // the spirals themselves changed...
    expect(scene10.primitives).not.toEqual(scene25.primitives);
    // ...but the point they wind toward painted in the same place
    expect(Math.hypot(at10[0] - at25[0], at10[1] - at25[1])).toBeLessThan(2);
  });
});

describe("zoom", () => {
  it("x2 in then x2 out about one anchor restores the viewport within 1e-9, with no requests", async () => {
    const client = new CountingClient();
    const session = new Session(corpus("fig7"), client, {
      canvas: CANVAS,
      painter: new RecordingPainter(),
    });
    await session.evaluateAndPaint();
    const before = structuredClone(session.viewport!);
    const requestsBefore = client.requests.length;
    const anchor: [number, number] = [137, 622];

    session.onZoom(0.5, anchor);
    expect(session.viewport!.half_extent).toBeCloseTo(before.half_extent / 2, 9);
    session.onZoom(2, anchor);

    const after = session.viewport!;
    expect(Math.abs(after.half_extent - before.half_extent)).toBeLessThan(1e-9);
    expect(Math.abs(after.center[0] - before.center[0])).toBeLessThan(1e-9);
    expect(Math.abs(after.center[1] - before.center[1])).toBeLessThan(1e-9);
    expect(client.requests.length).toBe(requestsBefore); // pure zoom never re-evaluates
  });
});
