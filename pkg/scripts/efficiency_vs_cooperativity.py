"""Exact vs closed-form transfer efficiencies across cooperativity, both schemes,
alongside the cavity values.  Prints a table; with --fit also reports the
log-log slope of the residual loss at gamma0 = 0."""
import argparse
import warnings

import numpy as np

from spinmem import atomic, cavity
from spinmem.params import MediumParams


def table(cs, gamma0, g2n):
    print(f"{'C':>8} {'eit':>8} {'eit~':>8} {'raman':>8} {'raman~':>8} {'cav-eit':>8} {'cav-ram':>8}")
    for c in cs:
        e = MediumParams.eit(c, 10, gamma0, g2n=g2n)
        r = MediumParams.raman(c, 0.01, gamma0, g2n=g2n)
        ce = MediumParams.cavity(c, 0.1, gamma0, gamma_e=10.0)
        cr = MediumParams.cavity(c, 0.1, gamma0, gamma_r=0.01)
        row = (atomic.efficiency_exact(e, "eit"), atomic.efficiency_asymptotic(e, "eit"),
               atomic.efficiency_exact(r, "raman"), atomic.efficiency_asymptotic(r, "raman"),
               cavity.efficiency_cavity(ce, "cavity-eit"), cavity.efficiency_cavity(cr, "cavity-raman"))
        print(f"{c:8.1f} " + " ".join(f"{v:8.4f}" for v in row))


def slopes(cs, g2n):
    loss_sp = [1 - atomic.efficiency_exact(MediumParams.eit(c, 10, 0.0, g2n=g2n), "eit") for c in cs]
    loss_cav = [1 - cavity.efficiency_cavity(MediumParams.cavity(c, 0.1, 0.0, gamma_e=10.0), "cavity-eit")
                for c in cs]
    x = np.log(cs)
    print(f"slope single pass {np.polyfit(x, np.log(loss_sp), 1)[0]:.3f}, "
          f"cavity {np.polyfit(x, np.log(loss_cav), 1)[0]:.3f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gamma0", type=float, default=1e-3)
    ap.add_argument("--g2n", type=float, default=1e6)
    ap.add_argument("--cmin", type=float, default=1.0)
    ap.add_argument("--cmax", type=float, default=1e3)
    ap.add_argument("--points", type=int, default=13)
    ap.add_argument("--fit", action="store_true")
    args = ap.parse_args()
    warnings.simplefilter("ignore", UserWarning)

    cs = np.logspace(np.log10(args.cmin), np.log10(args.cmax), args.points)
    table(cs, args.gamma0, args.g2n)
    if args.fit:
        slopes(cs[cs >= 10], args.g2n)


if __name__ == "__main__":
    main()
