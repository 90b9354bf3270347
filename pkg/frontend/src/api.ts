/** Thin client for the engine's POST /evaluate endpoint.
 *
 * The endpoint answers every evaluation outcome — including malformed
 * requests — with the same response shape, so the only client-side error
 * cases are "nothing is listening there" and "whatever answered does not
 * speak our schema version".
 */

import { SCHEMA_VERSION, type EvaluateRequest, type EvaluateResponse } from "./wire";

export class EndpointUnreachable extends Error {
  constructor(endpoint: string, cause?: unknown) {
    super(`evaluate endpoint unreachable at ${endpoint}`, { cause });
    this.name = "EndpointUnreachable";
  }
}

export class SchemaMismatch extends Error {
  constructor(got: unknown) {
    super(`endpoint answered with schema ${String(got)}, expected ${SCHEMA_VERSION}`);
    this.name = "SchemaMismatch";
  }
}

/** The sliver of fetch() the client uses; injectable for tests. */
export type FetchLike = (
  url: string,
  init: { method: string; headers: Record<string, string>; body: string },
) => Promise<{ json(): Promise<unknown> }>;

export interface Evaluator {
  evaluate(request: EvaluateRequest): Promise<EvaluateResponse>;
}

export class EvaluateClient implements Evaluator {
  private readonly fetchFn: FetchLike;

  constructor(readonly endpoint: string, fetchFn?: FetchLike) {
    this.fetchFn = fetchFn ?? (fetch as unknown as FetchLike);
  }

  async evaluate(request: EvaluateRequest): Promise<EvaluateResponse> {
    let raw: { json(): Promise<unknown> };
    try {
      raw = await this.fetchFn(this.endpoint, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ schema: SCHEMA_VERSION, ...request }),
      });
    } catch (cause) {
      throw new EndpointUnreachable(this.endpoint, cause);
    }
    let body: unknown;
    try {
      body = await raw.json();
    } catch (cause) {
      throw new EndpointUnreachable(this.endpoint, cause);
    }
    if (typeof body !== "object" || body === null) {
      throw new SchemaMismatch(body);
    }
    const response = body as EvaluateResponse;
    if (response.schema !== SCHEMA_VERSION) {
      throw new SchemaMismatch(response.schema);
    }
    return response;
  }
}
