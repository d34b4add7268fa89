// Globals provided by the CDN scripts in index.html (tfjs + pose-detection
// UMD bundles). Typed loosely; the adapter validates the shapes it consumes.

declare namespace poseDetection {
  interface Keypoint {
    x: number;
    y: number;
    score?: number;
    name?: string;
  }
  interface Pose {
    keypoints: Keypoint[];
    score?: number;
  }
  interface PoseDetector {
    estimatePoses(input: HTMLVideoElement): Promise<Pose[]>;
  }
  const SupportedModels: { MoveNet: string };
  function createDetector(model: string, config?: object): Promise<PoseDetector>;
}
