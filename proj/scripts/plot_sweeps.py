#!/usr/bin/env python3
# Copyright 2026 The qamp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Plot qamp sweep CSVs.

Example:
    qamp gain-sweep --device apa --subtractions 1..4 --out apa.csv
    qamp gain-sweep --device npa --subtractions 1..4 --out npa.csv
    scripts/plot_sweeps.py --x noise --y g apa.csv npa.csv

The x/y arguments name CSV columns; rows are grouped into one line per
(file, device, M).
"""

import argparse
import csv
import math
import sys


def load_rows(path):
    with open(path, newline="") as handle:
        return list(csv.DictReader(handle))


def main():
    parser = argparse.ArgumentParser(description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("csv", nargs="+", help="sweep CSV files written by qamp")
    parser.add_argument("--x", default="noise", help="x-axis column (default: noise)")
    parser.add_argument("--y", default="g", help="y-axis column (default: g)")
    parser.add_argument("--out", help="save the figure instead of showing it")
    args = parser.parse_args()

    try:
        import matplotlib.pyplot as plt
    except ImportError:
        sys.exit("matplotlib is required for plotting")

    fig, axis = plt.subplots(figsize=(7, 4.5))
    for path in args.csv:
        groups = {}
        for row in load_rows(path):
            x = float(row[args.x])
            y = float(row[args.y])
            if math.isnan(x) or math.isnan(y):
                continue
            groups.setdefault((row["device"], row["M"]), []).append((x, y))
        for (device, m), points in sorted(groups.items()):
            points.sort()
            axis.plot([p[0] for p in points], [p[1] for p in points],
                      label=f"{device} M={m} ({path})")

    axis.set_xlabel(args.x)
    axis.set_ylabel(args.y)
    axis.grid(True, alpha=0.3)
    axis.legend(fontsize=8)
    fig.tight_layout()
    if args.out:
        fig.savefig(args.out, dpi=150)
        print(f"wrote {args.out}")
    else:
        plt.show()


if __name__ == "__main__":
    main()
