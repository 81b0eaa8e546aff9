// Bridge protocol messages. Requests carry a client-chosen id; every
// response echoes it. The passphrase travels only in check requests and
// is never echoed back by the bridge.

export interface InitRequest {
  id: string;
  kind: "init";
  domains: string[];
  q?: number;
  eps?: number;
  /** test-only: hex seed making the whole instance predictable */
  seed?: string;
}

export interface CheckRequest {
  id: string;
  kind: "check";
  dbBase64: string;
  passphrase: string;
  domain: string;
}

export interface InitResult {
  id: string;
  kind: "initResult";
  dbBase64: string;
  passphraseWords: string[];
  fingerprintHex: string;
  sceneJson: string;
  svg: string;
}

export interface WordVerdict {
  word: string;
  accepted: boolean;
  suggestion: string | null;
}

export interface CheckResult {
  id: string;
  kind: "checkResult";
  fingerprintHex: string;
  sceneJson: string;
  svg: string;
  wordStatus: WordVerdict[];
}

export interface BridgeErrorMessage {
  id: string;
  kind: "error";
  code: string;
  message: string;
  /** 1-based index of the offending domain or passphrase word */
  position?: number;
}

export type BridgeRequest = InitRequest | CheckRequest;
export type BridgeResponse = InitResult | CheckResult | BridgeErrorMessage;
