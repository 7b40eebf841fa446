"""Profile str_f across n: value, maximising weight class, gap to the recurrence bound."""

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from qstr.bounds import lower_bound, upper_bound_recurrence
from qstr.strength import strf_hypercube_scan, weight_class_maxima


@dataclass
class ScanConfig:
    n_min: int = 2
    n_max: int = 20


def profile(cfg: ScanConfig):
    for n in range(cfg.n_min, cfg.n_max + 1):
        t0 = time.perf_counter()
        res = strf_hypercube_scan(n)
        maxima = weight_class_maxima(n)
        argmax = min(i for i, (v, _) in maxima.items() if v == res.value)
        rec = upper_bound_recurrence(n) if n >= 3 else None
        yield {
            "n": n,
            "str_f": res.value,
            "lower": lower_bound(n),
            "upper_recurrence": rec,
            "gap": None if rec is None else rec - res.value,
            "argmax_weight": argmax,
            "witness": f"{res.witness[0]}|{res.witness[1]}",
            "seconds": round(time.perf_counter() - t0, 3),
        }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=20)
    args = ap.parse_args()
    cfg = ScanConfig(args.n_min, args.n_max)
    w = None
    for row in profile(cfg):
        if w is None:
            w = csv.DictWriter(sys.stdout, fieldnames=list(row))
            w.writeheader()
        w.writerow(row)
        sys.stdout.flush()


if __name__ == "__main__":
    main()
