#!/usr/bin/env python3
"""Benchmark the pure-Python and compiled kernels on the same frame stream.

Times two things per kernel: the raw kernel calls on pre-flattened arrays, and
the end-to-end pipeline (PoseFrame -> profile -> feedback) with that kernel
active. Run after `pip install -e .`:

    python3 benchmarks/bench_kernels.py --frames 20000
"""

from __future__ import annotations

import argparse
import random
import time

import fittutor._kernel as kernel_mod
from fittutor import ComparisonConfig, compare_profiles, extract_profile, make_reference
from fittutor._kernel import pure
from fittutor.skeleton import PART_INDEX, BodyPart, Keypoint, PoseFrame

try:
    from fittutor._kernel import _speedups
except ImportError:
    _speedups = None


def random_frame(rng: random.Random, t: int) -> PoseFrame:
    kps = tuple(
        Keypoint(part, rng.uniform(0, 640), rng.uniform(0, 480), rng.uniform(0.4, 1.0))
        for part in BodyPart
    )
    return PoseFrame(t, 640, 480, kps)


def flatten(frame: PoseFrame):
    xs = [float(kp.x) for kp in frame.keypoints]
    ys = [float(kp.y) for kp in frame.keypoints]
    ss = [float(kp.score) for kp in frame.keypoints]
    return xs, ys, ss


def bench_kernel(impl, flat_frames, ref_entries, prox, dist, axes) -> float:
    start = time.perf_counter()
    for xs, ys, ss in flat_frames:
        entries = impl.extract_pairs(xs, ys, ss, prox, dist, 0.5)
        impl.compare_pairs(ref_entries, entries, axes, 0.5, False, 15.0)
    return len(flat_frames) / (time.perf_counter() - start)


def bench_pipeline(impl, frames, ref, config) -> float:
    saved = (kernel_mod.extract_pairs, kernel_mod.compare_pairs, kernel_mod.active)
    kernel_mod.extract_pairs = impl.extract_pairs
    kernel_mod.compare_pairs = impl.compare_pairs
    kernel_mod.active = impl
    try:
        start = time.perf_counter()
        for frame in frames:
            compare_profiles(ref.profile, extract_profile(frame, config), config)
        return len(frames) / (time.perf_counter() - start)
    finally:
        kernel_mod.extract_pairs, kernel_mod.compare_pairs, kernel_mod.active = saved


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--frames", type=int, default=20000)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    config = ComparisonConfig()
    frames = [random_frame(rng, t) for t in range(args.frames)]
    ref = make_reference("bench", frames[0], config)

    prox = [PART_INDEX[p.proximal] for p in config.pairs]
    dist = [PART_INDEX[p.distal] for p in config.pairs]
    axes = [0, 0, 1, 1]
    flat_frames = [flatten(f) for f in frames]
    xs, ys, ss = flat_frames[0]
    ref_entries = pure.extract_pairs(xs, ys, ss, prox, dist, 0.5)

    impls = [("pure", pure)]
    if _speedups is not None:
        impls.append(("cython", _speedups))
    else:
        print("compiled kernel not built; benchmarking pure only")

    print(f"{args.frames} frames, 4 pairs, single thread")
    print(f"{'kernel':<8} {'kernel-only fps':>16} {'pipeline fps':>14}")
    results = {}
    for name, impl in impls:
        raw = bench_kernel(impl, flat_frames, ref_entries, prox, dist, axes)
        pipe = bench_pipeline(impl, frames, ref, config)
        results[name] = (raw, pipe)
        print(f"{name:<8} {raw:>16,.0f} {pipe:>14,.0f}")
    if len(results) == 2:
        raw_speedup = results["cython"][0] / results["pure"][0]
        pipe_speedup = results["cython"][1] / results["pure"][1]
        print(f"speedup  {raw_speedup:>15.2f}x {pipe_speedup:>13.2f}x")


if __name__ == "__main__":
    main()
