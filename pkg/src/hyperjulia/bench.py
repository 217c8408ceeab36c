"""Benchmark the compiled kernel core against the pure numpy fallback.

Run with ``python -m hyperjulia.bench``. Also double-checks that both
backends produce identical grids before timing them.
"""
from __future__ import annotations

import argparse
import os
import time

import numpy as np

from ._backend import available_backends, kernels
from .escape import EscapeConfig
from .hypnum import HyperbolicNumber
from .render import GridSpec


def _time_banded(kernel_fn, args, height, workers, repeats=3):
    from .render import run_rows_parallel

    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        run_rows_parallel(kernel_fn, height, workers, args)
        best = min(best, time.perf_counter() - t0)
    return best


def run(size: int, max_iter: int, workers: int) -> int:
    cfg = EscapeConfig(max_iter=max_iter)
    spec = GridSpec(frame="characteristic", min_u=-3.0, max_u=1.25,
                    min_v=-3.0, max_v=1.25, width=size, height=size)
    c = HyperbolicNumber.from_char(-1.0, -1.0)
    tasks = {
        "mandelbrot": lambda k, out: (
            k.mandelbrot_counts,
            (out, spec.min_u, spec.du, spec.max_v, spec.dv, True,
             cfg.max_iter, cfg.bound)),
        "julia(-1,-1)": lambda k, out: (
            k.julia_counts,
            (out, spec.min_u, spec.du, spec.max_v, spec.dv, True,
             c.x, c.y, cfg.max_iter, cfg.bound)),
    }

    backends = available_backends()
    print(f"grid {size}x{size}, max_iter {max_iter}, backends: {', '.join(backends)}")
    print(f"{'task':14s} {'backend':9s} {'workers':7s} {'seconds':>9s} {'speedup':>8s}")
    exit_code = 0
    for task_name, make in tasks.items():
        outputs = {}
        base_time = None
        for backend in ("pure",) + (("compiled",) if "compiled" in backends else ()):
            k = kernels(backend)
            for w in (1, workers):
                out = np.zeros((size, size), np.int32)
                fn, args = make(k, out)
                secs = _time_banded(fn, args, size, w)
                if base_time is None:
                    base_time = secs
                print(f"{task_name:14s} {backend:9s} {w:<7d} {secs:9.3f} "
                      f"{base_time / secs:7.1f}x")
                outputs[(backend, w)] = out
        grids = list(outputs.values())
        if not all(np.array_equal(grids[0], g) for g in grids[1:]):
            print(f"MISMATCH: {task_name} grids differ across backends/workers")
            exit_code = 1
    if exit_code == 0:
        print("all backends and worker counts produced identical grids")
    return exit_code


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=600)
    parser.add_argument("--max-iter", type=int, default=200)
    parser.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    ns = parser.parse_args(argv)
    return run(ns.size, ns.max_iter, ns.workers)


if __name__ == "__main__":
    raise SystemExit(main())
