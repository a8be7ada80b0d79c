// Thin client for the local JSON-over-HTTP service.  Every request is
// recorded so tests can assert that displayed values round-tripped
// through the service rather than being computed in the browser.

export interface QuiverData {
  n: number;
  arrows: [number, number][];
}

export interface DefinednessWire {
  neg: boolean;
  pos: boolean;
}

export interface VertexReportWire {
  k: number;
  before: DefinednessWire;
  after: DefinednessWire;
  verdict: "good" | "bad";
}

export interface LogEntry {
  op: string;
  payload: unknown;
  result: unknown;
}

export class ApiError extends Error {
  constructor(public code: string, message: string) {
    super(message);
  }
}

export class ApiClient {
  readonly log: LogEntry[] = [];

  constructor(private base: string = "") {}

  async call<T>(op: string, payload: Record<string, unknown>): Promise<T> {
    const resp = await fetch(`${this.base}/api/${op}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ v: 1, ...payload }),
    });
    let body: any;
    try {
      body = await resp.json();
    } catch {
      throw new ApiError("bad-response", `service returned ${resp.status}`);
    }
    if (!body.ok) {
      const err = body.error ?? { code: "unknown", message: "unknown error" };
      throw new ApiError(err.code, err.message);
    }
    this.log.push({ op, payload, result: body.result });
    return body.result as T;
  }

  mutate(quiver: QuiverData, k: number): Promise<{ quiver: QuiverData }> {
    return this.call("mutate", { quiver, k });
  }

  classify(quiver: QuiverData): Promise<{ family: string; form: string }> {
    return this.call("classify", { quiver });
  }

  invariants(quiver: QuiverData): Promise<{
    det: number;
    associated: { coeffs: number[]; pretty: string };
  }> {
    return this.call("invariants", { quiver });
  }

  mutationReport(quiver: QuiverData): Promise<{ vertices: VertexReportWire[] }> {
    return this.call("mutation_report", { quiver });
  }

  stdForm(
    quiver: QuiverData,
    relation: "good" | "derived",
  ): Promise<{ form: string }> {
    return this.call("std_form", { quiver, relation });
  }
}
