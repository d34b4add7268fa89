// Wire protocol and document shapes shared with the session server.
// Every verdict shown in the UI comes verbatim from a server feedback
// message; nothing here computes matches.

export type PartName =
  | "nose"
  | "leftEye"
  | "rightEye"
  | "leftEar"
  | "rightEar"
  | "leftShoulder"
  | "rightShoulder"
  | "leftElbow"
  | "rightElbow"
  | "leftWrist"
  | "rightWrist"
  | "leftHip"
  | "rightHip"
  | "leftKnee"
  | "rightKnee"
  | "leftAnkle"
  | "rightAnkle";

export const PART_NAMES: PartName[] = [
  "nose",
  "leftEye",
  "rightEye",
  "leftEar",
  "rightEar",
  "leftShoulder",
  "rightShoulder",
  "leftElbow",
  "rightElbow",
  "leftWrist",
  "rightWrist",
  "leftHip",
  "rightHip",
  "leftKnee",
  "rightKnee",
  "leftAnkle",
  "rightAnkle",
];

export interface KeypointDoc {
  part: PartName;
  x: number;
  y: number;
  score: number;
}

export interface FrameDoc {
  t: number;
  w: number;
  h: number;
  keypoints: KeypointDoc[];
}

export type Status =
  | "Match"
  | "MoveUp"
  | "MoveDown"
  | "MoveLeft"
  | "MoveRight"
  | "NotVisible"
  | "Indeterminate";

export interface PairFeedbackDoc {
  status: Status;
  deviation?: number;
}

export interface FeedbackDoc {
  t: number;
  pairs: Record<string, PairFeedbackDoc>;
}

export interface PairCountsDoc {
  matchFrames: number;
  correctionFrames: number;
  notVisibleFrames: number;
}

export interface ReportDoc {
  framesProcessed: number;
  framesUsable: number;
  fullMatchFrames: number;
  perPair: Record<string, PairCountsDoc>;
}

export interface JointPairDoc {
  id: string;
  proximal: PartName;
  distal: PartName;
  limbClass: "arm" | "leg";
}

export interface ComparisonConfigDoc {
  tolerance?: number;
  minScore?: number;
  pairs?: JointPairDoc[];
  pairSetName?: "table2" | "extended";
  mode?: "slope" | "angle";
  angleToleranceDeg?: number;
}

export interface SessionConfigDoc {
  comparison?: ComparisonConfigDoc;
  debounceFrames?: number;
}

// The profile block is a server-side cache; a reference captured in the
// browser omits it and the server recomputes.
export interface ReferenceDoc {
  name: string;
  frame: FrameDoc;
  config?: ComparisonConfigDoc;
  profile?: Record<string, { slope: number | "vertical" | null; valid: boolean }>;
}

export type ClientMessage =
  | { type: "hello"; reference: ReferenceDoc | string; config?: SessionConfigDoc }
  | { type: "frame"; frame: FrameDoc }
  | { type: "end" };

export type ServerMessage =
  | { type: "feedback"; feedback: FeedbackDoc }
  | { type: "report"; report: ReportDoc }
  | { type: "error"; code: "bad-hello" | "bad-frame"; message: string };

export const TABLE2_PAIR_IDS = ["leftArm", "rightArm", "leftLeg", "rightLeg"];

// Joint pairs the server compares, used for overlay coloring.
export const PAIR_SEGMENTS: Record<string, [PartName, PartName]> = {
  leftArm: ["leftShoulder", "leftElbow"],
  rightArm: ["rightShoulder", "rightElbow"],
  leftLeg: ["leftHip", "leftAnkle"],
  rightLeg: ["rightHip", "rightAnkle"],
  leftForearm: ["leftElbow", "leftWrist"],
  rightForearm: ["rightElbow", "rightWrist"],
};
