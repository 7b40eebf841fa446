"""Throughput of the scalar and batch labelers and of the pair scan."""

import argparse
import os
import time
from dataclasses import dataclass

import numpy as np

from qstr.bits import BitString
from qstr.labeling import label_of, labels_of_array
from qstr.strength import strf_hypercube_scan


@dataclass
class BenchConfig:
    n: int = 30
    batch: int = 2_000_000
    scalar: int = 100_000
    scan_n: int = 24
    seed: int = 0


def run(cfg: BenchConfig) -> dict:
    rng = np.random.default_rng(cfg.seed)
    xs = rng.integers(0, 1 << cfg.n, cfg.batch, dtype=np.uint64)
    labels_of_array(cfg.n, xs[:1000])
    t0 = time.perf_counter()
    labels_of_array(cfg.n, xs)
    batch_rate = cfg.batch / (time.perf_counter() - t0)
    t0 = time.perf_counter()
    for x in xs[: cfg.scalar].tolist():
        label_of(cfg.n, BitString(cfg.n, x))
    scalar_rate = cfg.scalar / (time.perf_counter() - t0)
    t0 = time.perf_counter()
    res = strf_hypercube_scan(cfg.scan_n)
    return {
        "threads": os.environ.get("QSTR_THREADS", "default"),
        "batch_labels_per_s": round(batch_rate),
        "scalar_labels_per_s": round(scalar_rate),
        f"scan_{cfg.scan_n}_value": res.value,
        f"scan_{cfg.scan_n}_s": round(time.perf_counter() - t0, 2),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=30)
    ap.add_argument("--batch", type=int, default=2_000_000)
    ap.add_argument("--scalar", type=int, default=100_000)
    ap.add_argument("--scan-n", type=int, default=24)
    a = ap.parse_args()
    for k, v in run(BenchConfig(a.n, a.batch, a.scalar, a.scan_n)).items():
        print(f"{k}: {v}")


if __name__ == "__main__":
    main()
