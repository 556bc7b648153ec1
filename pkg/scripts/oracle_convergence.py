"""Slice-count convergence of the sliced-medium oracle against the closed form."""
import argparse
import time
import warnings

import numpy as np

from spinmem.atomic import spin_spectrum
from spinmem.oracle import grid_oracle_spin_spectrum
from spinmem.params import MediumParams


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scheme", choices=("eit", "raman"), default="eit")
    ap.add_argument("--slices", type=int, nargs="+", default=[50, 100, 200, 400, 800])
    args = ap.parse_args()
    warnings.simplefilter("ignore", UserWarning)

    if args.scheme == "eit":
        p = MediumParams.eit(100, 10, 1e-3)
    else:
        p = MediumParams.raman(100, 0.01, 1e-3)
    w = np.logspace(-4, 2, 50)
    ref = spin_spectrum(w, 0.5, p, args.scheme)
    prev = None
    for n in args.slices:
        t0 = time.perf_counter()
        got = grid_oracle_spin_spectrum(w, p, n, args.scheme, s_in=0.5, check_convergence=False)
        err = np.max(np.abs(got - ref) / ref)
        rate = "" if prev is None else f"  rate {np.log2(prev / err):.2f}"
        print(f"{n:6d} slices  max rel err {err:.3e}  {time.perf_counter() - t0:.3f} s{rate}")
        prev = err


if __name__ == "__main__":
    main()
