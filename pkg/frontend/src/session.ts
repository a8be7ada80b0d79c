// Session state: the current quiver, an undo stack of exact snapshots,
// and the cached analysis.  All mathematics comes from the service; the
// session only stores what it was told.

import { ApiClient, QuiverData, VertexReportWire } from "./api.js";

export interface Analysis {
  form: string;
  family: string;
  det: number;
  associated: string;
  associatedCoeffs: number[];
  goodStd: string | null;
  derivedStd: string | null;
  vertices: VertexReportWire[];
}

export interface Snapshot {
  quiver: QuiverData;
  analysis: Analysis;
}

export interface HistoryEntry {
  quiver: QuiverData;
  mutatedVertex: number;
}

function cloneQuiver(q: QuiverData): QuiverData {
  return { n: q.n, arrows: q.arrows.map((a) => [a[0], a[1]] as [number, number]) };
}

export class Session {
  initial: QuiverData | null = null;
  current: QuiverData | null = null;
  analysis: Analysis | null = null;
  /** (quiver before the click, clicked vertex) pairs, oldest first. */
  history: HistoryEntry[] = [];
  private undoStack: Snapshot[] = [];

  constructor(private api: ApiClient) {}

  private async analyze(quiver: QuiverData): Promise<Analysis> {
    const classified = await this.api.classify(quiver);
    const inv = await this.api.invariants(quiver);
    const report = await this.api.mutationReport(quiver);
    let goodStd: string | null = null;
    let derivedStd: string | null = null;
    if (classified.family === "D") {
      goodStd = (await this.api.stdForm(quiver, "good")).form;
      derivedStd = (await this.api.stdForm(quiver, "derived")).form;
    }
    return {
      form: classified.form,
      family: classified.family,
      det: inv.det,
      associated: inv.associated.pretty,
      associatedCoeffs: inv.associated.coeffs,
      goodStd,
      derivedStd,
      vertices: report.vertices,
    };
  }

  async load(quiver: QuiverData): Promise<void> {
    const analysis = await this.analyze(quiver);
    this.initial = cloneQuiver(quiver);
    this.current = cloneQuiver(quiver);
    this.analysis = analysis;
    this.history = [];
    this.undoStack = [];
  }

  /** Mutate at a clicked vertex.  On service failure the session is
   * left untouched. */
  async mutateAt(k: number): Promise<void> {
    if (!this.current || !this.analysis) {
      throw new Error("no quiver loaded");
    }
    const before = cloneQuiver(this.current);
    const beforeAnalysis = this.analysis;
    const mutated = await this.api.mutate(before, k);
    const analysis = await this.analyze(mutated.quiver);
    // only now touch the session: both calls succeeded
    this.undoStack.push({ quiver: before, analysis: beforeAnalysis });
    this.history.push({ quiver: before, mutatedVertex: k });
    this.current = cloneQuiver(mutated.quiver);
    this.analysis = analysis;
  }

  canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  /** Restore the exact pre-click snapshot (no service round trip). */
  undo(): void {
    const snap = this.undoStack.pop();
    if (!snap) {
      return;
    }
    this.history.pop();
    this.current = cloneQuiver(snap.quiver);
    this.analysis = snap.analysis;
  }

  /** Replay the recorded history from the initial quiver; used to check
   * the session invariant. */
  async replayFromInitial(): Promise<QuiverData | null> {
    if (!this.initial) {
      return null;
    }
    let q = cloneQuiver(this.initial);
    for (const entry of this.history) {
      const res = await this.api.mutate(q, entry.mutatedVertex);
      q = res.quiver;
    }
    return q;
  }
}

export function sameQuiver(a: QuiverData, b: QuiverData): boolean {
  const key = (q: QuiverData) =>
    `${q.n}|${q.arrows
      .map((x) => `${x[0]},${x[1]}`)
      .sort()
      .join(";")}`;
  return key(a) === key(b);
}
