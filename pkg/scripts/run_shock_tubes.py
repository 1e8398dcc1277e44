#!/usr/bin/env python3
"""Run the Sod and modified-Sod shock tubes with a few flux/dissipation
combinations and summarize the solution-quality metrics."""

import argparse
from dataclasses import replace

from kepes.driver import run
from kepes.presets import preset

CASES = [
    ("sod", "kepec", "roe", 2),
    ("sod", "kepec", "kes", 2),
    ("modified_sod", "roe_baseline", "roe", 1),
    ("modified_sod", "kepec", "roe", 1),
    ("modified_sod", "kepec", "ec1", 1),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--output-dir", default="out/shock_tubes")
    args = parser.parse_args()

    for name, flux, law, order in CASES:
        cfg = preset(name)
        cfg = replace(cfg, flux_kind=flux,
                      diss=replace(cfg.diss, matrix_law=law),
                      recon=replace(cfg.recon, order=order))
        tag = f"{name}_{flux}_{law}_o{order}"
        result = run(cfg, f"{args.output_dir}/{tag}")
        print(f"{tag}: {result.message} ({result.steps} steps)")
        if result.metrics_path:
            with open(result.metrics_path) as fh:
                for line in fh:
                    if line.startswith(("l1_error_rho", "density_jump")):
                        print("   ", line.strip())


if __name__ == "__main__":
    main()
