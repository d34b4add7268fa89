// WebSocket session client. One instance is one coaching session: send a
// hello, then frames; the server answers each frame with exactly one
// feedback message and sends the report after an end message.

import {
  ClientMessage,
  FeedbackDoc,
  FrameDoc,
  ReferenceDoc,
  ReportDoc,
  ServerMessage,
  SessionConfigDoc,
} from "./protocol";

// Minimal slice of the browser WebSocket API; the node `ws` package
// satisfies it too, which is what the replay test uses.
export interface WebSocketLike {
  send(data: string): void;
  close(): void;
  addEventListener(type: "open", listener: () => void): void;
  addEventListener(type: "close", listener: () => void): void;
  addEventListener(type: "message", listener: (event: { data: unknown }) => void): void;
  addEventListener(type: "error", listener: (event: unknown) => void): void;
}

export type WebSocketFactory = (url: string) => WebSocketLike;

export interface SessionHandlers {
  onFeedback?: (feedback: FeedbackDoc) => void;
  onReport?: (report: ReportDoc) => void;
  onServerError?: (code: string, message: string) => void;
  onClose?: () => void;
}

export class SessionClient {
  private ws: WebSocketLike | null = null;
  private handlers: SessionHandlers;
  private opened = false;

  constructor(
    private url: string,
    handlers: SessionHandlers = {},
    private factory: WebSocketFactory = (u) => new WebSocket(u) as WebSocketLike,
  ) {
    this.handlers = handlers;
  }

  get isOpen(): boolean {
    return this.opened;
  }

  /** Connect and send the hello; resolves once the socket is open. */
  start(
    reference: ReferenceDoc | string,
    config?: SessionConfigDoc,
  ): Promise<void> {
    return new Promise((resolve, reject) => {
      const ws = this.factory(this.url);
      this.ws = ws;
      ws.addEventListener("open", () => {
        this.opened = true;
        const hello: ClientMessage = config
          ? { type: "hello", reference, config }
          : { type: "hello", reference };
        ws.send(JSON.stringify(hello));
        resolve();
      });
      ws.addEventListener("error", (event) => {
        if (!this.opened) {
          reject(event instanceof Error ? event : new Error("connection failed"));
        }
      });
      ws.addEventListener("close", () => {
        this.opened = false;
        this.handlers.onClose?.();
      });
      ws.addEventListener("message", (event) => {
        this.dispatch(String(event.data));
      });
    });
  }

  private dispatch(raw: string): void {
    let msg: ServerMessage;
    try {
      msg = JSON.parse(raw) as ServerMessage;
    } catch {
      this.handlers.onServerError?.("bad-message", "unparseable server message");
      return;
    }
    if (msg.type === "feedback") {
      this.handlers.onFeedback?.(msg.feedback);
    } else if (msg.type === "report") {
      this.handlers.onReport?.(msg.report);
    } else if (msg.type === "error") {
      this.handlers.onServerError?.(msg.code, msg.message);
    }
  }

  sendFrame(frame: FrameDoc): void {
    if (!this.ws || !this.opened) {
      throw new Error("session is not open");
    }
    const msg: ClientMessage = { type: "frame", frame };
    this.ws.send(JSON.stringify(msg));
  }

  /** Ask for the report; the server closes the session afterwards. */
  end(): void {
    if (this.ws && this.opened) {
      this.ws.send(JSON.stringify({ type: "end" }));
    }
  }

  close(): void {
    this.ws?.close();
    this.ws = null;
    this.opened = false;
  }
}

/** Drops frames so at most `maxPerSecond` pass; the engine is stateless per
 * frame, so dropped frames are harmless. */
export class RateLimiter {
  private lastAt = -Infinity;

  constructor(private maxPerSecond: number) {}

  shouldSend(nowMs: number): boolean {
    if (nowMs - this.lastAt >= 1000 / this.maxPerSecond) {
      this.lastAt = nowMs;
      return true;
    }
    return false;
  }
}
