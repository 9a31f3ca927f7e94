import { describe, expect, it } from "vitest";

import { AnnotationApi, ApiError } from "../src/api.js";

function fakeFetch(
  handler: (url: string, init?: RequestInit) => { status: number; body: unknown },
): typeof fetch {
  return (async (input: RequestInfo | URL, init?: RequestInit) => {
    const { status, body } = handler(String(input), init);
    const text = typeof body === "string" ? body : JSON.stringify(body);
    return new Response(text, {
      status,
      headers: { "Content-Type": "application/json" },
    });
  }) as typeof fetch;
}

describe("AnnotationApi", () => {
  it("fetches and decodes the next record", async () => {
    const api = new AnnotationApi(
      "http://x",
      fakeFetch((url) => {
        expect(url).toBe("http://x/api/batches/batch-1/next?annotator=ann%201");
        return {
          status: 200,
          body: {
            done: false,
            record: { id: "god:prayer", category: "god", source: "prayer", candidate: "gebed" },
          },
        };
      }),
    );
    const next = await api.next("batch-1", "ann 1");
    expect(next.record?.candidate).toBe("gebed");
  });

  it("posts decisions as JSON with the sheet field names", async () => {
    let captured: unknown = null;
    const api = new AnnotationApi(
      "",
      fakeFetch((url, init) => {
        expect(url).toBe("/api/decisions");
        expect(init?.method).toBe("POST");
        captured = JSON.parse(String(init?.body));
        return { status: 201, body: { ok: true } };
      }),
    );
    await api.submit({
      batch_id: "b",
      annotator: "a",
      id: "god:prayer",
      semantically_correct: true,
      contextually_correct: true,
      replacement: "",
      additions: [],
    });
    expect(captured).toMatchObject({
      semantically_correct: true,
      contextually_correct: true,
    });
  });

  it("surfaces server errors with the status code", async () => {
    const api = new AnnotationApi(
      "",
      fakeFetch(() => ({ status: 404, body: "unknown batch" })),
    );
    await expect(api.progress("nope")).rejects.toThrowError(ApiError);
    await expect(api.progress("nope")).rejects.toMatchObject({ status: 404 });
  });

  it("returns the export as raw text", async () => {
    const csv = "id,category\nhate:x,hate\n";
    const api = new AnnotationApi(
      "",
      fakeFetch(() => ({ status: 200, body: csv })),
    );
    expect(await api.exportCsv("b", "a")).toBe(csv);
  });
});
