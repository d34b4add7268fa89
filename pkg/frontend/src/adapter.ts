// Converts detector output into canonical frame documents.
//
// tfjs pose-detection models emit either camelCase names (PoseNet) or
// snake_case (MoveNet); both map onto the canonical camelCase names. Anything
// else is an error rather than a guess.

import { FrameDoc, KeypointDoc, PART_NAMES, PartName } from "./protocol";

export interface DetectorKeypoint {
  name?: string;
  part?: string;
  x?: number;
  y?: number;
  position?: { x: number; y: number };
  score?: number;
}

const CANONICAL = new Set<string>(PART_NAMES);

const SNAKE_TO_CANONICAL: Record<string, PartName> = Object.fromEntries(
  PART_NAMES.map((name) => [
    name.replace(/[A-Z]/g, (c) => "_" + c.toLowerCase()),
    name,
  ]),
) as Record<string, PartName>;

export function canonicalPartName(raw: string): PartName {
  if (CANONICAL.has(raw)) {
    return raw as PartName;
  }
  const mapped = SNAKE_TO_CANONICAL[raw];
  if (mapped === undefined) {
    throw new Error(`unknown keypoint name: ${raw}`);
  }
  return mapped;
}

export function toFrameDoc(
  keypoints: DetectorKeypoint[],
  opts: { t: number; width: number; height: number },
): FrameDoc {
  const seen = new Map<PartName, KeypointDoc>();
  for (const kp of keypoints) {
    const raw = kp.name ?? kp.part;
    if (raw === undefined) {
      throw new Error("keypoint without a name");
    }
    const part = canonicalPartName(raw);
    const x = kp.x ?? kp.position?.x;
    const y = kp.y ?? kp.position?.y;
    if (x === undefined || y === undefined) {
      throw new Error(`keypoint ${raw} without coordinates`);
    }
    // Detectors occasionally report score slightly outside [0, 1].
    const score = Math.min(1, Math.max(0, kp.score ?? 0));
    seen.set(part, { part, x, y, score });
  }
  if (seen.size !== PART_NAMES.length) {
    const missing = PART_NAMES.filter((p) => !seen.has(p));
    throw new Error(`incomplete skeleton, missing: ${missing.join(", ")}`);
  }
  return {
    t: opts.t,
    w: opts.width,
    h: opts.height,
    keypoints: PART_NAMES.map((p) => seen.get(p)!),
  };
}

// The capture flow sends the reference without a profile; the server
// recomputes and owns the geometry.
export function toReferenceDoc(name: string, frame: FrameDoc) {
  return { name, frame };
}
