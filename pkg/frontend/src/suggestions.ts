// Turns server verdicts into on-screen text and colors.
//
// Mirror mode flips the canvas and the left/right direction words only: the
// limb identity ("your right leg") and Match verdicts never change, because
// the server's view is camera-truthful.

import { Status } from "./protocol";

export const COLOR_MATCH = "#2e9e4f"; // green
export const COLOR_CORRECTION = "#e0a132"; // amber
export const COLOR_NOT_VISIBLE = "#8a8a8a"; // gray

export function limbColor(status: Status): string {
  if (status === "Match") {
    return COLOR_MATCH;
  }
  if (status === "NotVisible") {
    return COLOR_NOT_VISIBLE;
  }
  return COLOR_CORRECTION;
}

const PAIR_LABELS: Record<string, string> = {
  leftArm: "left arm",
  rightArm: "right arm",
  leftLeg: "left leg",
  rightLeg: "right leg",
  leftForearm: "left forearm",
  rightForearm: "right forearm",
};

export function pairLabel(pairId: string): string {
  return PAIR_LABELS[pairId] ?? pairId;
}

export function displayedStatus(status: Status, mirrored: boolean): Status {
  if (!mirrored) {
    return status;
  }
  if (status === "MoveLeft") {
    return "MoveRight";
  }
  if (status === "MoveRight") {
    return "MoveLeft";
  }
  return status;
}

const DIRECTION_WORD: Partial<Record<Status, string>> = {
  MoveUp: "up",
  MoveDown: "down",
  MoveLeft: "left",
  MoveRight: "right",
};

// "Move left arm up", "Move right leg left", ... null when nothing to say.
export function suggestionText(
  pairId: string,
  status: Status,
  mirrored: boolean,
): string | null {
  const shown = displayedStatus(status, mirrored);
  const direction = DIRECTION_WORD[shown];
  if (direction !== undefined) {
    return `Move ${pairLabel(pairId)} ${direction}`;
  }
  if (shown === "NotVisible") {
    return `Cannot see ${pairLabel(pairId)}`;
  }
  return null; // Match and Indeterminate draw no instruction
}
