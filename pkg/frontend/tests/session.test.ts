import { describe, expect, it } from "vitest";

import { ApiClient, QuiverData } from "../src/api.js";
import { Session, sameQuiver } from "../src/session.js";
import { renderAnalysis } from "../src/viewmodel.js";

// A deterministic fake service: "mutation" at k reverses the arrows at
// k (enough to exercise session mechanics without any real math).
class FakeApi extends ApiClient {
  calls: string[] = [];

  override async call<T>(
    op: string,
    payload: Record<string, unknown>,
  ): Promise<T> {
    this.calls.push(op);
    const quiver = payload.quiver as QuiverData;
    if (op === "mutate") {
      const k = payload.k as number;
      const arrows = quiver.arrows.map(([a, b]) =>
        a === k || b === k ? ([b, a] as [number, number]) : ([a, b] as [number, number]),
      );
      const result = { quiver: { n: quiver.n, arrows } };
      this.log.push({ op, payload, result });
      return result as T;
    }
    const key = quiver.arrows.map((a) => a.join(">")).join(";");
    const fake: Record<string, unknown> = {
      classify: { family: "D", form: `form[${key}]` },
      invariants: {
        det: key.length,
        associated: { coeffs: [1, key.length], pretty: `poly[${key}]` },
      },
      mutation_report: {
        vertices: Array.from({ length: quiver.n }, (_, i) => ({
          k: i,
          before: { neg: true, pos: false },
          after: { neg: false, pos: true },
          verdict: i % 2 === 0 ? "good" : "bad",
        })),
      },
      std_form: { form: `std[${payload.relation}][${key}]` },
    };
    const result = fake[op];
    if (!result) throw new Error(`unexpected op ${op}`);
    this.log.push({ op, payload, result });
    return result as T;
  }
}

const TRIANGLE: QuiverData = {
  n: 3,
  arrows: [
    [0, 1],
    [1, 2],
    [2, 0],
  ],
};

describe("Session", () => {
  it("loads and caches analysis from the service only", async () => {
    const api = new FakeApi();
    const session = new Session(api);
    await session.load(TRIANGLE);
    expect(session.analysis?.form).toContain("form[");
    expect(api.calls).toContain("classify");
    expect(api.calls).toContain("invariants");
    expect(api.calls).toContain("mutation_report");
    const vm = renderAnalysis(session);
    // every displayed number appears verbatim in a logged response
    const loggedDets = api.log
      .filter((e) => e.op === "invariants")
      .map((e) => (e.result as { det: number }).det);
    expect(loggedDets).toContain(vm.panel.det);
  });

  it("double mutation at the same vertex restores the quiver", async () => {
    const api = new FakeApi();
    const session = new Session(api);
    await session.load(TRIANGLE);
    await session.mutateAt(1);
    expect(sameQuiver(session.current!, TRIANGLE)).toBe(false);
    await session.mutateAt(1);
    expect(sameQuiver(session.current!, TRIANGLE)).toBe(true);
    expect(session.history.length).toBe(2);
  });

  it("undo restores the exact prior view model without a service call", async () => {
    const api = new FakeApi();
    const session = new Session(api);
    await session.load(TRIANGLE);
    const before = JSON.stringify(renderAnalysis(session));
    await session.mutateAt(0);
    const callsAfterMutation = api.calls.length;
    expect(JSON.stringify(renderAnalysis(session))).not.toBe(before);
    session.undo();
    const after = JSON.stringify(renderAnalysis(session));
    expect(api.calls.length).toBe(callsAfterMutation);
    // identical except the undo control state
    const a = JSON.parse(before);
    const b = JSON.parse(after);
    expect(b.vertices).toEqual(a.vertices);
    expect(b.arrows).toEqual(a.arrows);
    expect(b.panel).toEqual(a.panel);
    expect(b.historyLength).toBe(0);
  });

  it("replaying history reproduces the current quiver", async () => {
    const api = new FakeApi();
    const session = new Session(api);
    await session.load(TRIANGLE);
    await session.mutateAt(0);
    await session.mutateAt(2);
    const replayed = await session.replayFromInitial();
    expect(sameQuiver(replayed!, session.current!)).toBe(true);
  });

  it("failed mutation leaves the session unchanged", async () => {
    const api = new FakeApi();
    const failing = new Session(api);
    await failing.load(TRIANGLE);
    const snapshot = JSON.stringify([failing.current, failing.analysis]);
    api.call = async () => {
      throw new Error("service unreachable");
    };
    await expect(failing.mutateAt(0)).rejects.toThrow("unreachable");
    expect(JSON.stringify([failing.current, failing.analysis])).toBe(snapshot);
    expect(failing.history.length).toBe(0);
  });

  it("empty history disables undo in the view model", async () => {
    const api = new FakeApi();
    const session = new Session(api);
    await session.load(TRIANGLE);
    expect(renderAnalysis(session).undoEnabled).toBe(false);
    await session.mutateAt(0);
    expect(renderAnalysis(session).undoEnabled).toBe(true);
  });
});
