#!/usr/bin/env python3
"""Stationary-shock study: march the exact jump data for several Mach
numbers and eigenvalue laws, reporting the steady residual and the
monotonicity of the captured shock."""

import argparse
from dataclasses import replace

import numpy as np

from kepes.diagnostics import monotonicity_defect
from kepes.driver import run
from kepes.presets import preset


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--output-dir", default="out/stationary_shock")
    parser.add_argument("--machs", default="1.5,4,20")
    parser.add_argument("--laws", default="roe,ec1,kes,hyb")
    args = parser.parse_args()

    for mach in args.machs.split(","):
        base = preset(f"stationary_shock_m{mach}")
        for law in args.laws.split(","):
            cfg = replace(base, diss=replace(base.diss, matrix_law=law))
            tag = f"m{mach}_{law}"
            result = run(cfg, f"{args.output_dir}/{tag}")
            import csv

            with open(f"{args.output_dir}/{tag}/snapshot_final.csv") as fh:
                rho = np.array([float(r["rho"]) for r in csv.DictReader(fh)])
            defect = monotonicity_defect(rho, increasing=True)
            print(f"{tag}: {result.message}; density monotonicity defect "
                  f"{defect:.2e}")


if __name__ == "__main__":
    main()
