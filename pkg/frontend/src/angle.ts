/** Binds a slider to the rotation argument of the first circumscribe(...)
 * call in the program text.
 *
 * The binding is a character span over the numeric literal, so changing the
 * angle is a pure text splice — the engine re-reads the whole program and
 * stays the sole interpreter of it.  Sources whose rotation argument is not
 * a plain numeric literal (an identifier, or a radian-suffixed value) are
 * not slider material and yield no control.
 */

export interface AngleRange {
  min: number;
  max: number;
}

/** Wide enough to show both spiral directions, clear of the degenerate
 * angles near ±90° where the circumscription collapses. */
export const DEFAULT_ANGLE_RANGE: AngleRange = { min: -80, max: 80 };

export interface AngleControl {
  /** Char offset of the numeric literal in the source. */
  start: number;
  /** One past the literal's last char. */
  end: number;
  /** Current value in degrees. */
  value: number;
  range: AngleRange;
}

const FIRST_CALL = /\bcircumscribe\s*\(/;
const PLAIN_NUMBER = /^-?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?$/;

export function bindAngleControl(
  source: string,
  range: AngleRange = DEFAULT_ANGLE_RANGE,
): AngleControl | null {
  const call = FIRST_CALL.exec(source);
  if (!call) {
    return null;
  }
  const open = call.index + call[0].length;
  const close = source.indexOf(")", open);
  if (close < 0) {
    return null;
  }
  const inner = source.slice(open, close);
  const firstComma = inner.indexOf(",");
  if (firstComma < 0) {
    return null;
  }
  const nextComma = inner.indexOf(",", firstComma + 1);
  const rawStart = firstComma + 1;
  const rawEnd = nextComma < 0 ? inner.length : nextComma;
  const raw = inner.slice(rawStart, rawEnd);
  const text = raw.trim();
  if (!PLAIN_NUMBER.test(text)) {
    return null;
  }
  const start = open + rawStart + (raw.length - raw.trimStart().length);
  return { start, end: start + text.length, value: Number(text), range };
}

export function clampAngle(control: AngleControl, degrees: number): number {
  return Math.min(control.range.max, Math.max(control.range.min, degrees));
}

/** Splice a new angle into the source; returns the new text and the control
 * rebound to the spliced literal. */
export function setAngle(
  source: string,
  control: AngleControl,
  degrees: number,
): { source: string; control: AngleControl } {
  const value = clampAngle(control, degrees);
  const literal = String(value);
  const next = source.slice(0, control.start) + literal + source.slice(control.end);
  return {
    source: next,
    control: { ...control, end: control.start + literal.length, value },
  };
}
