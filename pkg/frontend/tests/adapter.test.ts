import { describe, expect, it } from "vitest";

import { canonicalPartName, toFrameDoc } from "../src/adapter";
import { PART_NAMES } from "../src/protocol";

const OPTS = { t: 0, width: 640, height: 480 };

function moveNetKeypoints() {
  return PART_NAMES.map((name, i) => ({
    name: name.replace(/[A-Z]/g, (c) => "_" + c.toLowerCase()),
    x: 10 * i,
    y: 5 * i,
    score: 0.9,
  }));
}

function poseNetKeypoints() {
  return PART_NAMES.map((part, i) => ({
    part,
    position: { x: 10 * i, y: 5 * i },
    score: 0.9,
  }));
}

describe("canonicalPartName", () => {
  it("passes canonical names through", () => {
    expect(canonicalPartName("leftShoulder")).toBe("leftShoulder");
    expect(canonicalPartName("nose")).toBe("nose");
  });

  it("maps snake_case detector names", () => {
    expect(canonicalPartName("left_shoulder")).toBe("leftShoulder");
    expect(canonicalPartName("right_ankle")).toBe("rightAnkle");
  });

  it("rejects unknown names", () => {
    expect(() => canonicalPartName("snout")).toThrow(/unknown keypoint/);
    expect(() => canonicalPartName("LeftShoulder")).toThrow(/unknown keypoint/);
  });
});

describe("toFrameDoc", () => {
  it("converts MoveNet-style keypoints", () => {
    const frame = toFrameDoc(moveNetKeypoints(), OPTS);
    expect(frame.keypoints).toHaveLength(17);
    expect(frame.keypoints.map((kp) => kp.part)).toEqual(PART_NAMES);
    expect(frame.w).toBe(640);
  });

  it("converts PoseNet-style keypoints with position objects", () => {
    const a = toFrameDoc(moveNetKeypoints(), OPTS);
    const b = toFrameDoc(poseNetKeypoints(), OPTS);
    expect(b).toEqual(a);
  });

  it("orders keypoints canonically regardless of input order", () => {
    const shuffled = [...moveNetKeypoints()].reverse();
    const frame = toFrameDoc(shuffled, OPTS);
    expect(frame.keypoints.map((kp) => kp.part)).toEqual(PART_NAMES);
  });

  it("clamps scores into [0, 1]", () => {
    const kps = moveNetKeypoints();
    kps[0].score = 1.000001;
    kps[1].score = -0.2;
    const frame = toFrameDoc(kps, OPTS);
    expect(frame.keypoints[0].score).toBe(1);
    expect(frame.keypoints[1].score).toBe(0);
  });

  it("rejects incomplete skeletons", () => {
    expect(() => toFrameDoc(moveNetKeypoints().slice(1), OPTS)).toThrow(
      /missing: nose/,
    );
  });

  it("carries the timestamp", () => {
    const frame = toFrameDoc(moveNetKeypoints(), { t: 1234, width: 640, height: 480 });
    expect(frame.t).toBe(1234);
  });
});
