import { describe, expect, it } from "vitest";

import { bindAngleControl, clampAngle, setAngle } from "../src/angle";

const SPIRAL = `A = point(0, 0)
B = point(4, 0)
C = point(1, 2)
T = triangle(A, B, C)
iterate 10 {
  T = circumscribe(T, 20)
  draw T
}
`;

describe("bindAngleControl", () => {
  it("finds the rotation literal of the first circumscribe call", () => {
    const control = bindAngleControl(SPIRAL);
    expect(control).not.toBeNull();
    expect(control!.value).toBe(20);
    expect(SPIRAL.slice(control!.start, control!.end)).toBe("20");
  });

  it("defaults to the -80..80 range", () => {
    const control = bindAngleControl(SPIRAL)!;
    expect(control.range).toEqual({ min: -80, max: 80 });
  });

  it("reads decimals and negative angles", () => {
    const control = bindAngleControl("S = circumscribe(T, -12.5)\n")!;
    expect(control.value).toBe(-12.5);
  });

  it("binds the literal even with a third argument present", () => {
    const source = "S = circumscribe(T, 40, ccw)\n";
    const control = bindAngleControl(source)!;
    expect(source.slice(control.start, control.end)).toBe("40");
  });

  it("yields no control without a circumscribe call", () => {
    expect(bindAngleControl("T = triangle(A, B, C)\ndraw T\n")).toBeNull();
  });

  it("yields no control when the rotation is an identifier or radian-suffixed", () => {
    expect(bindAngleControl("S = circumscribe(T, theta)\n")).toBeNull();
    expect(bindAngleControl("S = circumscribe(T, 0.35rad)\n")).toBeNull();
  });
});

describe("setAngle", () => {
  it("splices the new value and rebinds the span", () => {
    const control = bindAngleControl(SPIRAL)!;
    const next = setAngle(SPIRAL, control, 35);
    expect(next.source).toContain("circumscribe(T, 35)");
    expect(next.source).not.toContain("circumscribe(T, 20)");
    expect(next.control.value).toBe(35);
    expect(next.source.slice(next.control.start, next.control.end)).toBe("35");
  });

  it("handles literals that change width", () => {
    const control = bindAngleControl(SPIRAL)!;
    const wide = setAngle(SPIRAL, control, -67.5);
    expect(wide.source).toContain("circumscribe(T, -67.5)");
    const narrow = setAngle(wide.source, wide.control, 5);
    expect(narrow.source).toContain("circumscribe(T, 5)");
    expect(narrow.source).toBe(SPIRAL.replace("circumscribe(T, 20)", "circumscribe(T, 5)"));
  });

  it("clamps to the control's range", () => {
    const control = bindAngleControl(SPIRAL)!;
    expect(clampAngle(control, 500)).toBe(80);
    expect(clampAngle(control, -500)).toBe(-80);
    const next = setAngle(SPIRAL, control, 500);
    expect(next.control.value).toBe(80);
    expect(next.source).toContain("circumscribe(T, 80)");
  });

  it("only touches the bound span", () => {
    const control = bindAngleControl(SPIRAL)!;
    const next = setAngle(SPIRAL, control, 21);
    expect(next.source.slice(0, control.start)).toBe(SPIRAL.slice(0, control.start));
    expect(next.source.slice(next.control.end)).toBe(SPIRAL.slice(control.end));
  });
});
