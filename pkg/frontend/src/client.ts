// Thin bridge client: one in-flight request per client, responses
// correlated by id.

import type {
  BridgeErrorMessage,
  BridgeRequest,
  BridgeResponse,
  CheckResult,
  InitResult,
} from "./types.js";

export class BridgeError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly position?: number,
  ) {
    super(message);
  }
}

export class BridgeClient {
  private seq = 0;
  private inFlight = false;

  constructor(private readonly baseUrl: string) {}

  get busy(): boolean {
    return this.inFlight;
  }

  private async send(request: BridgeRequest): Promise<BridgeResponse> {
    if (this.inFlight) {
      throw new Error("a bridge request is already in flight");
    }
    this.inFlight = true;
    try {
      const resp = await fetch(this.baseUrl, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(request),
      });
      const body = (await resp.json()) as BridgeResponse;
      if (body.id !== request.id) {
        throw new Error(`response id ${body.id} does not match request ${request.id}`);
      }
      if (body.kind === "error") {
        const e = body as BridgeErrorMessage;
        throw new BridgeError(e.code, e.message, e.position);
      }
      return body;
    } finally {
      this.inFlight = false;
    }
  }

  async init(domains: string[], opts: { q?: number; eps?: number; seed?: string } = {}): Promise<InitResult> {
    const result = await this.send({
      id: `r${++this.seq}`,
      kind: "init",
      domains,
      ...opts,
    });
    return result as InitResult;
  }

  async check(dbBase64: string, passphrase: string, domain: string): Promise<CheckResult> {
    const result = await this.send({
      id: `r${++this.seq}`,
      kind: "check",
      dbBase64,
      passphrase,
      domain,
    });
    return result as CheckResult;
  }
}
