// Browser wiring: webcam, in-browser pose model, session client, overlay.

import { DetectorKeypoint, toFrameDoc, toReferenceDoc } from "./adapter";
import { RateLimiter, SessionClient } from "./client";
import { drawOverlay } from "./overlay";
import { FeedbackDoc, FrameDoc, ReferenceDoc } from "./protocol";
import { UiSessionState } from "./state";
import { suggestionText } from "./suggestions";

const MAX_SEND_FPS = 15;
const MIN_VALID_SCORE = 0.5;

const video = document.getElementById("camera") as HTMLVideoElement;
const canvas = document.getElementById("overlay") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const statusLine = document.getElementById("status")!;
const banner = document.getElementById("banner")!;
const suggestionsBox = document.getElementById("suggestions")!;
const serverUrlInput = document.getElementById("server-url") as HTMLInputElement;
const mirrorToggle = document.getElementById("mirror") as HTMLInputElement;
const buttons = {
  camera: document.getElementById("btn-camera") as HTMLButtonElement,
  capture: document.getElementById("btn-capture") as HTMLButtonElement,
  upload: document.getElementById("btn-upload") as HTMLButtonElement,
  download: document.getElementById("btn-download") as HTMLButtonElement,
  coach: document.getElementById("btn-coach") as HTMLButtonElement,
  stop: document.getElementById("btn-stop") as HTMLButtonElement,
};
const uploadInput = document.getElementById("upload-input") as HTMLInputElement;

const state = new UiSessionState();
let detector: poseDetection.PoseDetector | null = null;
let client: SessionClient | null = null;
let lastFrameSent: FrameDoc | null = null;
const limiter = new RateLimiter(MAX_SEND_FPS);

function setStatus(text: string) {
  statusLine.textContent = text;
}

function showBanner(text: string | null) {
  banner.textContent = text ?? "";
  banner.style.display = text ? "block" : "none";
}

function syncButtons() {
  const haveCamera = video.srcObject !== null;
  buttons.capture.disabled = !(haveCamera && detector) || state.phase === "coaching";
  buttons.download.disabled = state.currentReference === null;
  buttons.coach.disabled =
    state.currentReference === null || state.phase === "coaching";
  buttons.stop.disabled = state.phase !== "coaching";
}

async function startCamera() {
  try {
    const stream = await navigator.mediaDevices.getUserMedia({
      video: { width: 640, height: 480 },
    });
    video.srcObject = stream;
    await video.play();
    canvas.width = video.videoWidth;
    canvas.height = video.videoHeight;
    setStatus("camera on, loading pose model...");
    detector = await poseDetection.createDetector(
      poseDetection.SupportedModels.MoveNet,
    );
    setStatus("ready");
  } catch (err) {
    setStatus(`camera error: ${err instanceof Error ? err.message : err}`);
  }
  syncButtons();
}

async function currentFrame(): Promise<FrameDoc | null> {
  if (!detector || video.videoWidth === 0) {
    return null;
  }
  const poses = await detector.estimatePoses(video);
  if (poses.length === 0) {
    return null;
  }
  return toFrameDoc(poses[0].keypoints as DetectorKeypoint[], {
    t: Math.round(performance.now()),
    width: video.videoWidth,
    height: video.videoHeight,
  });
}

function validPairCount(frame: FrameDoc): number {
  // Confidence gating only; match verdicts stay on the server.
  const score = new Map(frame.keypoints.map((kp) => [kp.part, kp.score]));
  const pairs: [string, string][] = [
    ["leftShoulder", "leftElbow"],
    ["rightShoulder", "rightElbow"],
    ["leftHip", "leftAnkle"],
    ["rightHip", "rightAnkle"],
  ];
  return pairs.filter(
    ([a, b]) =>
      (score.get(a as never) ?? 0) >= MIN_VALID_SCORE &&
      (score.get(b as never) ?? 0) >= MIN_VALID_SCORE,
  ).length;
}

async function captureReference() {
  state.beginCapture();
  const frame = await currentFrame();
  if (!frame) {
    setStatus("no pose detected; try again");
    state.phase = "idle";
    return;
  }
  const valid = validPairCount(frame);
  showBanner(valid < 1 ? "warning: no limbs confidently visible in this reference" : null);
  state.setReference(toReferenceDoc("webcam-capture", frame));
  setStatus(`reference captured (${valid} of 4 pairs visible)`);
  syncButtons();
}

function downloadReference() {
  const ref = state.currentReference;
  if (!ref) {
    return;
  }
  const blob = new Blob([JSON.stringify(ref)], { type: "application/json" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = `${ref.name}.json`;
  a.click();
  URL.revokeObjectURL(a.href);
}

function uploadReference(file: File) {
  const reader = new FileReader();
  reader.onload = () => {
    try {
      const ref = JSON.parse(String(reader.result)) as ReferenceDoc;
      if (!ref.name || !ref.frame) {
        throw new Error("not a reference document");
      }
      state.setReference(ref);
      showBanner(null);
      setStatus(`reference "${ref.name}" loaded`);
    } catch (err) {
      setStatus(`upload failed: ${err instanceof Error ? err.message : err}`);
    }
    syncButtons();
  };
  reader.readAsText(file);
}

function renderFeedback(feedback: FeedbackDoc) {
  state.lastFeedback = feedback;
  if (lastFrameSent) {
    drawOverlay(ctx, lastFrameSent, feedback, state.mirrored);
  }
  const lines: string[] = [];
  for (const [pairId, pf] of Object.entries(feedback.pairs)) {
    const text = suggestionText(pairId, pf.status, state.mirrored);
    if (text) {
      lines.push(text);
    }
  }
  suggestionsBox.textContent = lines.length ? lines.join("\n") : "Looking good!";
}

async function coachLoop() {
  if (state.phase !== "coaching" || !client) {
    return;
  }
  if (limiter.shouldSend(performance.now())) {
    try {
      const frame = await currentFrame();
      if (frame) {
        lastFrameSent = frame;
        client.sendFrame(frame);
      } else {
        state.skippedFrames += 1;
      }
    } catch {
      state.skippedFrames += 1;
    }
  }
  requestAnimationFrame(coachLoop);
}

async function startCoaching() {
  const ref = state.currentReference;
  if (!ref) {
    return;
  }
  client = new SessionClient(serverUrlInput.value, {
    onFeedback: renderFeedback,
    onReport: (report) => {
      setStatus(
        `session over: ${report.fullMatchFrames}/${report.framesProcessed} frames fully matched`,
      );
    },
    onServerError: (code, message) => setStatus(`server: ${code}: ${message}`),
    onClose: () => {
      if (state.phase === "coaching") {
        state.stopCoaching();
        setStatus("connection lost; press Coach to reconnect");
        syncButtons();
      }
    },
  });
  try {
    await client.start(ref);
  } catch {
    setStatus("cannot reach the session server; is it running?");
    return;
  }
  state.beginCoaching(client.isOpen);
  setStatus("coaching");
  syncButtons();
  void coachLoop();
}

function stopCoaching() {
  client?.end(); // report arrives, then the server closes
  state.stopCoaching();
  syncButtons();
}

buttons.camera.addEventListener("click", () => void startCamera());
buttons.capture.addEventListener("click", () => void captureReference());
buttons.download.addEventListener("click", downloadReference);
buttons.upload.addEventListener("click", () => uploadInput.click());
uploadInput.addEventListener("change", () => {
  if (uploadInput.files?.[0]) {
    uploadReference(uploadInput.files[0]);
  }
});
buttons.coach.addEventListener("click", () => void startCoaching());
buttons.stop.addEventListener("click", stopCoaching);
mirrorToggle.addEventListener("change", () => {
  state.mirrored = mirrorToggle.checked;
  video.style.transform = state.mirrored ? "scaleX(-1)" : "";
  if (state.lastFeedback) {
    renderFeedback(state.lastFeedback);
  }
});

mirrorToggle.checked = state.mirrored;
video.style.transform = "scaleX(-1)";
syncButtons();
setStatus("press Start camera to begin");
