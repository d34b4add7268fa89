// Canvas overlay: the 17-keypoint skeleton with compared limbs colored by
// the server's verdict. Mirror mode flips the drawing horizontally.

import {
  FeedbackDoc,
  FrameDoc,
  PAIR_SEGMENTS,
  PartName,
} from "./protocol";
import { limbColor } from "./suggestions";

const MIN_DRAW_SCORE = 0.3;

// Torso/head context bones, drawn in a neutral color.
const CONTEXT_BONES: [PartName, PartName][] = [
  ["leftShoulder", "rightShoulder"],
  ["leftShoulder", "leftHip"],
  ["rightShoulder", "rightHip"],
  ["leftHip", "rightHip"],
  ["leftHip", "leftKnee"],
  ["leftKnee", "leftAnkle"],
  ["rightHip", "rightKnee"],
  ["rightKnee", "rightAnkle"],
  ["leftElbow", "leftWrist"],
  ["rightElbow", "rightWrist"],
  ["nose", "leftEye"],
  ["nose", "rightEye"],
  ["leftEye", "leftEar"],
  ["rightEye", "rightEar"],
];

function keypointMap(frame: FrameDoc) {
  const map = new Map<PartName, { x: number; y: number; score: number }>();
  for (const kp of frame.keypoints) {
    map.set(kp.part, kp);
  }
  return map;
}

export function drawOverlay(
  ctx: CanvasRenderingContext2D,
  frame: FrameDoc,
  feedback: FeedbackDoc | null,
  mirrored: boolean,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  ctx.save();
  if (mirrored) {
    ctx.translate(width, 0);
    ctx.scale(-1, 1);
  }
  const sx = width / frame.w;
  const sy = height / frame.h;
  const kps = keypointMap(frame);

  const segment = (a: PartName, b: PartName, color: string, lineWidth: number) => {
    const ka = kps.get(a);
    const kb = kps.get(b);
    if (!ka || !kb || ka.score < MIN_DRAW_SCORE || kb.score < MIN_DRAW_SCORE) {
      return;
    }
    ctx.beginPath();
    ctx.moveTo(ka.x * sx, ka.y * sy);
    ctx.lineTo(kb.x * sx, kb.y * sy);
    ctx.strokeStyle = color;
    ctx.lineWidth = lineWidth;
    ctx.stroke();
  };

  for (const [a, b] of CONTEXT_BONES) {
    segment(a, b, "#cccccc", 2);
  }
  if (feedback) {
    for (const [pairId, pf] of Object.entries(feedback.pairs)) {
      const ends = PAIR_SEGMENTS[pairId];
      if (ends) {
        segment(ends[0], ends[1], limbColor(pf.status), 5);
      }
    }
  }
  for (const kp of frame.keypoints) {
    if (kp.score < MIN_DRAW_SCORE) {
      continue;
    }
    ctx.beginPath();
    ctx.arc(kp.x * sx, kp.y * sy, 4, 0, Math.PI * 2);
    ctx.fillStyle = "#3578c9";
    ctx.fill();
  }
  ctx.restore();
}
