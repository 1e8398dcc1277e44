#!/usr/bin/env python3
"""Viscous shock-structure study on successively finer grids, with the
blended second/fourth-order scalar dissipation and the fourth-order-only
variant on the finest grid."""

import argparse

from kepes.driver import run
from kepes.presets import preset

CASES = ["ns_shock_structure_n50", "ns_shock_structure_n100",
         "ns_shock_structure_n200", "ns_shock_structure_n200_d4"]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--output-dir", default="out/ns_shock_structure")
    parser.add_argument("--cases", default=",".join(CASES))
    args = parser.parse_args()

    for name in args.cases.split(","):
        result = run(preset(name), f"{args.output_dir}/{name}")
        print(f"{name}: {result.message} ({result.steps} steps, "
              f"t = {result.final_time:.3f})")


if __name__ == "__main__":
    main()
