/** A Painter2D that records every call, for asserting exactly what was
 * painted without a real canvas. */

import type { Painter2D } from "../src/paint";

export type PaintOp = [string, ...unknown[]];

export class RecordingPainter implements Painter2D {
  lineWidth = 1;
  strokeStyle = "";
  fillStyle = "";
  font = "";
  readonly ops: PaintOp[] = [];

  beginPath(): void {
    this.ops.push(["beginPath"]);
  }

  moveTo(x: number, y: number): void {
    this.ops.push(["moveTo", x, y]);
  }

  lineTo(x: number, y: number): void {
    this.ops.push(["lineTo", x, y]);
  }

  arc(x: number, y: number, radius: number, startAngle: number, endAngle: number): void {
    this.ops.push(["arc", x, y, radius, startAngle, endAngle]);
  }

  closePath(): void {
    this.ops.push(["closePath"]);
  }

  stroke(): void {
    this.ops.push(["stroke", this.strokeStyle, this.lineWidth]);
  }

  fill(): void {
    this.ops.push(["fill", this.fillStyle]);
  }

  fillText(text: string, x: number, y: number): void {
    this.ops.push(["fillText", text, x, y, this.fillStyle, this.font]);
  }

  fillRect(x: number, y: number, w: number, h: number): void {
    this.ops.push(["fillRect", x, y, w, h, this.fillStyle]);
  }

  clearRect(x: number, y: number, w: number, h: number): void {
    this.ops.push(["clearRect", x, y, w, h]);
  }

  /** Ops since the most recent clearRect — i.e. what the canvas shows now. */
  currentFrame(): PaintOp[] {
    const last = this.ops.map((op) => op[0]).lastIndexOf("clearRect");
    return this.ops.slice(last + 1);
  }

  /** Count of painted elements in the current frame: one per fill, stroke,
   * or fillText (fillRect is background, not an element). */
  elementCount(): number {
    return this.currentFrame().filter(([op]) =>
      op === "fill" || op === "stroke" || op === "fillText",
    ).length;
  }
}
