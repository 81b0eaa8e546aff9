// Persistable session state. Only the database blob may be stored: the
// passphrase and fingerprint must never leave memory, since anyone holding
// them could impersonate the recognizer's visual channel.

export interface SessionSnapshot {
  dbBase64: string;
}

export function snapshot(dbBase64: string): SessionSnapshot {
  return { dbBase64 };
}

export function serializeSession(s: SessionSnapshot): string {
  return JSON.stringify({ dbBase64: s.dbBase64 });
}

export function deserializeSession(text: string): SessionSnapshot {
  const parsed: unknown = JSON.parse(text);
  if (
    typeof parsed !== "object" ||
    parsed === null ||
    typeof (parsed as { dbBase64?: unknown }).dbBase64 !== "string"
  ) {
    throw new Error("not a session snapshot");
  }
  return { dbBase64: (parsed as { dbBase64: string }).dbBase64 };
}
