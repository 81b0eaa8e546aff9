// Browser entry point wiring the two flows to the DOM.
//
// Setup flow: enter 2-5 onion domains, receive a passphrase to memorize
// and a reference fingerprint image. The database blob is kept for the
// session and offered as a download; the passphrase is shown once and
// never stored.
//
// Check flow: enter a domain and the passphrase. Words are validated
// locally as they are typed, with a suggestion when a typo has a unique
// close repair. The resulting fingerprint image is rendered without any
// match verdict: the user compares it against the picture they remember.

import { BridgeClient, BridgeError } from "./client.js";
import { snapshot, type SessionSnapshot } from "./session.js";
import { Wordlist, validateEntry } from "./validation.js";

const BRIDGE_URL = "http://127.0.0.1:8741/";
const WORDLIST_URL = "./wordlist.txt";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function showSvg(target: HTMLElement, svg: string): void {
  // The bridge emits a self-contained static SVG document.
  target.innerHTML = svg;
}

export function startApp(): void {
  const client = new BridgeClient(BRIDGE_URL);
  let wordlist: Wordlist | null = null;
  let session: SessionSnapshot | null = null;

  void fetch(WORDLIST_URL)
    .then((r) => r.text())
    .then((text) => {
      wordlist = Wordlist.fromText(text);
    })
    .catch(() => {
      el("check-status").textContent = "wordlist unavailable; live validation disabled";
    });

  // --- setup flow ---
  el<HTMLButtonElement>("init-button").addEventListener("click", () => {
    const raw = el<HTMLTextAreaElement>("init-domains").value;
    const domains = raw
      .split(/\n/)
      .map((d) => d.trim())
      .filter((d) => d.length > 0);
    const status = el("init-status");
    status.textContent = "working...";
    client
      .init(domains)
      .then((result) => {
        session = snapshot(result.dbBase64);
        el("init-passphrase").textContent = result.passphraseWords.join("-");
        showSvg(el("init-fingerprint"), result.svg);
        status.textContent =
          "memorize the passphrase and the picture; save the database file";
        const blob = new Blob([atob(result.dbBase64)], {
          type: "application/octet-stream",
        });
        const link = el<HTMLAnchorElement>("init-download");
        link.href = URL.createObjectURL(blob);
        link.hidden = false;
      })
      .catch((err: unknown) => {
        status.textContent = err instanceof BridgeError
          ? `${err.code}: ${err.message}`
          : String(err);
      });
  });

  // --- check flow ---
  const passInput = el<HTMLInputElement>("check-passphrase");
  passInput.addEventListener("input", () => {
    const status = el("check-validation");
    if (!wordlist) {
      status.textContent = "";
      return;
    }
    const verdicts = validateEntry(passInput.value, wordlist);
    const notes: string[] = [];
    for (const v of verdicts.words) {
      if (!v.accepted) {
        notes.push(
          v.suggestion
            ? `"${v.word}" is not a passphrase word; did you mean "${v.suggestion}"?`
            : `"${v.word}" is not a passphrase word`,
        );
      }
    }
    status.textContent = notes.length > 0 ? notes.join(" ") : verdicts.complete ? "all words recognized" : "";
  });

  el<HTMLButtonElement>("check-button").addEventListener("click", () => {
    const status = el("check-status");
    if (!session) {
      status.textContent = "load or create a database first";
      return;
    }
    status.textContent = "working...";
    client
      .check(session.dbBase64, passInput.value.trim(), el<HTMLInputElement>("check-domain").value.trim())
      .then((result) => {
        showSvg(el("check-fingerprint"), result.svg);
        status.textContent = "compare the picture with the one you memorized";
      })
      .catch((err: unknown) => {
        status.textContent = err instanceof BridgeError
          ? `${err.code}: ${err.message}`
          : String(err);
      });
  });

  el<HTMLInputElement>("check-dbfile").addEventListener("change", (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    void file.arrayBuffer().then((buf) => {
      session = snapshot(btoa(String.fromCharCode(...new Uint8Array(buf))));
      el("check-status").textContent = "database loaded";
    });
  });
}
