// Tri-state counterexample form: every attribute is "has", "lacks" or
// "unknown". Premise attributes are locked to "has" because a
// counterexample must satisfy the premise; "unknown" attributes are simply
// omitted from the submitted description.

export type TriState = "has" | "lacks" | "unknown";

const CYCLE: Record<TriState, TriState> = {
  unknown: "has",
  has: "lacks",
  lacks: "unknown",
};

export interface CounterexamplePayload {
  positive: string[];
  negative: string[];
}

export class AnswerFormModel {
  private readonly states = new Map<string, TriState>();
  private readonly premiseSet: Set<string>;
  private readonly conclusionSet: Set<string>;

  constructor(
    readonly attributes: readonly string[],
    readonly premise: readonly string[],
    readonly conclusion: readonly string[],
    readonly requireFull = false,
  ) {
    this.premiseSet = new Set(premise);
    this.conclusionSet = new Set(conclusion);
    for (const attr of attributes) {
      this.states.set(attr, this.premiseSet.has(attr) ? "has" : "unknown");
    }
  }

  stateOf(attr: string): TriState {
    const state = this.states.get(attr);
    if (state === undefined) throw new Error(`unknown attribute ${attr}`);
    return state;
  }

  isLocked(attr: string): boolean {
    return this.premiseSet.has(attr);
  }

  isProposed(attr: string): boolean {
    return this.conclusionSet.has(attr) && !this.premiseSet.has(attr);
  }

  set(attr: string, state: TriState): void {
    if (!this.states.has(attr)) throw new Error(`unknown attribute ${attr}`);
    if (this.isLocked(attr)) return;
    this.states.set(attr, state);
  }

  cycle(attr: string): TriState {
    this.set(attr, CYCLE[this.stateOf(attr)]);
    return this.stateOf(attr);
  }

  reset(): void {
    for (const attr of this.attributes) {
      this.states.set(attr, this.premiseSet.has(attr) ? "has" : "unknown");
    }
  }

  /** Mirror of the server-side answer validation; null when submittable. */
  validationError(): string | null {
    const denied = this.conclusion.filter(
      (attr) => !this.premiseSet.has(attr) && this.stateOf(attr) === "lacks",
    );
    if (denied.length === 0) {
      return "mark at least one proposed attribute as absent, or confirm instead";
    }
    if (this.requireFull) {
      const undecided = this.attributes.filter(
        (attr) => this.stateOf(attr) === "unknown",
      );
      if (undecided.length > 0) {
        return `decide every attribute (undecided: ${undecided.join(", ")})`;
      }
    }
    return null;
  }

  toPayload(): CounterexamplePayload {
    return {
      positive: this.attributes.filter((a) => this.stateOf(a) === "has"),
      negative: this.attributes.filter((a) => this.stateOf(a) === "lacks"),
    };
  }
}
