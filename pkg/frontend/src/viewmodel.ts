// Pure projection of session state into what gets drawn: vertex colors
// by verdict, the side panel fields, and control availability.  No
// mathematics happens here.

import { Session } from "./session.js";

export interface VertexView {
  id: number;
  verdict: "good" | "bad" | "unknown";
  before: string;
  after: string;
}

export interface PanelView {
  form: string;
  det: number | null;
  associated: string;
  goodStd: string;
  derivedStd: string;
}

export interface ViewModel {
  vertices: VertexView[];
  arrows: [number, number][];
  panel: PanelView;
  undoEnabled: boolean;
  historyLength: number;
}

function definednessLabel(d: { neg: boolean; pos: boolean }): string {
  if (d.neg && d.pos) return "neg & pos";
  if (d.neg) return "neg only";
  if (d.pos) return "pos only";
  return "none";
}

export function renderAnalysis(session: Session): ViewModel {
  const q = session.current;
  const analysis = session.analysis;
  if (!q || !analysis) {
    return {
      vertices: [],
      arrows: [],
      panel: { form: "", det: null, associated: "", goodStd: "", derivedStd: "" },
      undoEnabled: false,
      historyLength: 0,
    };
  }
  const byVertex = new Map(analysis.vertices.map((v) => [v.k, v]));
  const vertices: VertexView[] = [];
  for (let v = 0; v < q.n; v++) {
    const rep = byVertex.get(v);
    vertices.push({
      id: v,
      verdict: rep ? rep.verdict : "unknown",
      before: rep ? definednessLabel(rep.before) : "?",
      after: rep ? definednessLabel(rep.after) : "?",
    });
  }
  return {
    vertices,
    arrows: q.arrows.map((a) => [a[0], a[1]] as [number, number]),
    panel: {
      form: analysis.form,
      det: analysis.det,
      associated: analysis.associated,
      goodStd: analysis.goodStd ?? "(type A: not applicable)",
      derivedStd: analysis.derivedStd ?? "(type A: not applicable)",
    },
    undoEnabled: session.canUndo(),
    historyLength: session.history.length,
  };
}
