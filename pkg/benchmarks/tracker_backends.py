"""Benchmark the pure-Python vs compiled follower tracking loop.

Runs the same 1 kHz tracking workload through both backends and reports
wall time per simulated second plus the end-state agreement.

Usage: python benchmarks/tracker_backends.py [--seconds 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from armlab.backend import available_backends, make_tracker
from armlab.dynamics import ArmModel, ContactParams, JointState, SceneSpec, WorldState
from armlab.loops import Channel


def build():
    model = ArmModel(
        inertia=[0.06, 0.04, 0.004],
        damping=[0.08, 0.05, 0.01],
        coulomb=[0.01, 0.008, 0.002],
        limit_lower=[-1.2, -2.9, 0.0],
        limit_upper=[3.3, 2.9, 1.2],
        link_lengths=[0.3, 0.3],
    )
    scene = SceneSpec(slots={}, drawers=[], wall_x=0.32, contact=ContactParams())
    world = WorldState(
        object_xy=np.zeros((0, 2)),
        object_colors=[],
        object_in_drawer=np.zeros(0, dtype=np.int64),
        drawer_fraction=np.zeros(0),
        attached=np.array([-1]),
        step=0,
    )
    return model, scene, world


def run(backend, seconds, model, scene, world):
    from armlab.control import BilateralGains

    channel = Channel.at(np.array([0.3, 0.9, 0.6]))
    tracker = make_tracker(channel, model, BilateralGains(), scene, 1e-3,
                           backend=backend)
    n_low = seconds * 100
    t0 = time.perf_counter()
    for k in range(n_low):
        target = JointState(
            np.array([0.3, 0.9, 0.6]) + 0.1 * np.sin(0.01 * k + np.arange(3)),
            np.zeros(3),
            np.zeros(3),
        )
        tracker.run_ticks(10, target, world)
    elapsed = time.perf_counter() - t0
    return elapsed, channel.plant.angle.copy()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seconds", type=int, default=5,
                    help="simulated seconds per backend (1000 ticks each)")
    args = ap.parse_args()

    model, scene, world = build()
    results = {}
    for backend in available_backends():
        elapsed, angle = run(backend, args.seconds, model, scene, world)
        results[backend] = (elapsed, angle)
        print(f"{backend:>9}: {elapsed:.3f} s wall for {args.seconds} s simulated "
              f"({elapsed / args.seconds:.4f} s per simulated second)")
    if len(results) == 2:
        speedup = results["python"][0] / results["compiled"][0]
        diff = np.max(np.abs(results["python"][1] - results["compiled"][1]))
        print(f"  speedup: {speedup:.1f}x, max end-state angle diff {diff:.2e} rad")


if __name__ == "__main__":
    main()
