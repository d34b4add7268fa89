// UI session state machine. Coaching requires a reference and an open
// server session; everything else is bookkeeping the render loop reads.

import { FeedbackDoc, ReferenceDoc } from "./protocol";

export type Phase = "idle" | "capturingReference" | "coaching";

export class UiSessionState {
  phase: Phase = "idle";
  currentReference: ReferenceDoc | null = null;
  mirrored = true; // webcam users expect a mirror
  lastFeedback: FeedbackDoc | null = null;
  skippedFrames = 0; // model failures

  beginCapture(): void {
    if (this.phase === "coaching") {
      throw new Error("stop coaching before capturing a new reference");
    }
    this.phase = "capturingReference";
  }

  setReference(ref: ReferenceDoc): void {
    this.currentReference = ref;
    if (this.phase === "capturingReference") {
      this.phase = "idle";
    }
  }

  beginCoaching(sessionOpen: boolean): void {
    if (this.currentReference === null) {
      throw new Error("capture or upload a reference first");
    }
    if (!sessionOpen) {
      throw new Error("no open server session");
    }
    this.phase = "coaching";
    this.lastFeedback = null;
  }

  stopCoaching(): void {
    if (this.phase === "coaching") {
      this.phase = "idle";
    }
  }
}
