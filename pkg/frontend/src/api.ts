/** Typed client for the annotation HTTP API.
 *
 * Field names mirror the annotation sheet columns exactly; the client adds
 * nothing of its own.
 */

export interface BatchInfo {
  id: string;
  size: number;
}

export interface ReviewRecord {
  id: string;
  category: string;
  source: string;
  candidate: string;
}

export interface NextResponse {
  done: boolean;
  record: ReviewRecord | null;
}

export interface Progress {
  batch: string;
  total: number;
  by_annotator: Record<string, number>;
}

export interface DecisionPayload {
  batch_id: string;
  annotator: string;
  id: string;
  semantically_correct: boolean;
  contextually_correct: boolean;
  replacement: string;
  additions: string[];
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

type FetchLike = typeof fetch;

export class AnnotationApi {
  private readonly fetchImpl: FetchLike;

  constructor(readonly baseUrl: string = "", fetchImpl?: FetchLike) {
    this.fetchImpl = fetchImpl ?? fetch.bind(globalThis);
  }

  private async get<T>(path: string): Promise<T> {
    const resp = await this.fetchImpl(this.baseUrl + path);
    if (!resp.ok) {
      throw new ApiError(resp.status, await resp.text());
    }
    return (await resp.json()) as T;
  }

  batches(): Promise<BatchInfo[]> {
    return this.get("/api/batches");
  }

  next(batchId: string, annotator: string): Promise<NextResponse> {
    const q = encodeURIComponent(annotator);
    return this.get(`/api/batches/${encodeURIComponent(batchId)}/next?annotator=${q}`);
  }

  progress(batchId: string): Promise<Progress> {
    return this.get(`/api/batches/${encodeURIComponent(batchId)}/progress`);
  }

  async submit(payload: DecisionPayload): Promise<void> {
    const resp = await this.fetchImpl(this.baseUrl + "/api/decisions", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    if (!resp.ok) {
      throw new ApiError(resp.status, await resp.text());
    }
  }

  async exportCsv(batchId: string, annotator: string): Promise<string> {
    const q = encodeURIComponent(annotator);
    const resp = await this.fetchImpl(
      `${this.baseUrl}/api/export/${encodeURIComponent(batchId)}?annotator=${q}`,
    );
    if (!resp.ok) {
      throw new ApiError(resp.status, await resp.text());
    }
    return resp.text();
  }
}
