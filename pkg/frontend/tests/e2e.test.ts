// End-to-end smoke against the real Python service: spawns
// `dquiver serve` on a free port and drives the session through the
// actual HTTP API.

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, QuiverData } from "../src/api.js";
import { Session, sameQuiver } from "../src/session.js";
import { renderAnalysis } from "../src/viewmodel.js";

const PORT = 17481;
const BASE = `http://127.0.0.1:${PORT}`;

// the left 5-vertex example quiver: type II with parameters (1,0,0,0)
const D5_LEFT: QuiverData = {
  n: 5,
  arrows: [
    [0, 1],
    [1, 2],
    [2, 0],
    [2, 3],
    [3, 1],
    [2, 4],
  ],
};

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  for (let i = 0; i < 100; i++) {
    try {
      const resp = await fetch(`${BASE}/api/classify`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ quiver: D5_LEFT }),
      });
      if (resp.status === 200) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "dquiver.cli", "serve", "--port", String(PORT)], {
    cwd: "..",
    stdio: "ignore",
  });
  await waitForServer();
}, 30000);

afterAll(() => {
  server?.kill();
});

describe("explorer against the live service", () => {
  it("loads the D5 example and displays II(1,0,0,0) with det 2", async () => {
    const api = new ApiClient(BASE);
    const session = new Session(api);
    await session.load(D5_LEFT);
    const vm = renderAnalysis(session);
    expect(vm.panel.form).toBe("II(1,0,0,0)");
    expect(vm.panel.det).toBe(2);
    expect(vm.panel.associated).toBe("2*x^5 - 2*x^3 + 2*x^2 - 2");
    // every displayed number round-tripped through the service
    const ops = api.log.map((e) => e.op);
    expect(ops).toContain("classify");
    expect(ops).toContain("invariants");
    expect(ops).toContain("mutation_report");
    const logged = api.log.find((e) => e.op === "invariants")!
      .result as { det: number };
    expect(logged.det).toBe(vm.panel.det);
  });

  it("clicking a bad vertex and undoing restores the exact prior view", async () => {
    const api = new ApiClient(BASE);
    const session = new Session(api);
    await session.load(D5_LEFT);
    const before = renderAnalysis(session);
    const bad = before.vertices.find((v) => v.verdict === "bad");
    expect(bad).toBeDefined();
    await session.mutateAt(bad!.id);
    const during = renderAnalysis(session);
    expect(during.historyLength).toBe(1);
    session.undo();
    const after = renderAnalysis(session);
    expect(after.vertices).toEqual(before.vertices);
    expect(after.arrows).toEqual(before.arrows);
    expect(after.panel).toEqual(before.panel);
    expect(after.historyLength).toBe(0);
    expect(after.undoEnabled).toBe(false);
  });

  it("mutating the same vertex twice restores the original quiver", async () => {
    const api = new ApiClient(BASE);
    const session = new Session(api);
    await session.load(D5_LEFT);
    await session.mutateAt(1);
    await session.mutateAt(1);
    expect(sameQuiver(session.current!, D5_LEFT)).toBe(true);
    expect(session.history.length).toBe(2);
    const replayed = await session.replayFromInitial();
    expect(sameQuiver(replayed!, session.current!)).toBe(true);
  });

  it("good vertices keep the associated polynomial", async () => {
    const api = new ApiClient(BASE);
    const session = new Session(api);
    await session.load(D5_LEFT);
    const vm = renderAnalysis(session);
    const good = vm.vertices.find((v) => v.verdict === "good");
    expect(good).toBeDefined();
    const polyBefore = session.analysis!.associated;
    await session.mutateAt(good!.id);
    expect(session.analysis!.associated).toBe(polyBefore);
  });

  it("surfaces service errors without corrupting the session", async () => {
    const api = new ApiClient(BASE);
    const session = new Session(api);
    await session.load(D5_LEFT);
    const snapshot = JSON.stringify(renderAnalysis(session));
    await expect(session.mutateAt(99)).rejects.toThrow();
    expect(JSON.stringify(renderAnalysis(session))).toBe(snapshot);
  });
});
