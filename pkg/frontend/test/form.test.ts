import { describe, expect, it } from "vitest";

import { AnswerFormModel } from "../src/form.js";

const ATTRS = ["a", "b", "c", "d"];

describe("AnswerFormModel", () => {
  it("locks premise attributes to has", () => {
    const form = new AnswerFormModel(ATTRS, ["b"], ["a"]);
    expect(form.stateOf("b")).toBe("has");
    expect(form.isLocked("b")).toBe(true);
    form.cycle("b");
    expect(form.stateOf("b")).toBe("has");
    form.set("b", "lacks");
    expect(form.stateOf("b")).toBe("has");
  });

  it("starts everything else unknown and cycles has -> lacks -> unknown", () => {
    const form = new AnswerFormModel(ATTRS, [], ["a"]);
    expect(form.stateOf("a")).toBe("unknown");
    expect(form.cycle("a")).toBe("has");
    expect(form.cycle("a")).toBe("lacks");
    expect(form.cycle("a")).toBe("unknown");
  });

  it("marks proposed conclusion attributes", () => {
    const form = new AnswerFormModel(ATTRS, ["a"], ["a", "c"]);
    expect(form.isProposed("c")).toBe(true);
    expect(form.isProposed("a")).toBe(false); // premise wins
    expect(form.isProposed("d")).toBe(false);
  });

  it("requires at least one denied conclusion attribute", () => {
    const form = new AnswerFormModel(ATTRS, ["a"], ["a", "b", "c"]);
    expect(form.validationError()).toMatch(/at least one/);
    form.set("d", "lacks"); // denying a non-conclusion attribute is not enough
    expect(form.validationError()).toMatch(/at least one/);
    form.set("b", "lacks");
    expect(form.validationError()).toBeNull();
  });

  it("maps states to a positive/negative payload, omitting unknowns", () => {
    const form = new AnswerFormModel(ATTRS, ["a"], ["b"]);
    form.set("b", "lacks");
    form.set("c", "has");
    expect(form.toPayload()).toEqual({ positive: ["a", "c"], negative: ["b"] });
  });

  it("demands full descriptions when requested", () => {
    const form = new AnswerFormModel(ATTRS, ["a"], ["b"], true);
    form.set("b", "lacks");
    expect(form.validationError()).toMatch(/undecided: c, d/);
    form.set("c", "has");
    form.set("d", "lacks");
    expect(form.validationError()).toBeNull();
  });

  it("resets to the initial locked layout", () => {
    const form = new AnswerFormModel(ATTRS, ["a"], ["b"]);
    form.set("b", "lacks");
    form.reset();
    expect(form.stateOf("b")).toBe("unknown");
    expect(form.stateOf("a")).toBe("has");
  });

  it("rejects unknown attributes", () => {
    const form = new AnswerFormModel(ATTRS, [], []);
    expect(() => form.stateOf("zz")).toThrow();
    expect(() => form.set("zz", "has")).toThrow();
  });
});
