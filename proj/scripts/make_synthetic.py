#!/usr/bin/env python3
"""Regenerates data/synthetic.csv, the committed test fixture.

246 raw rows; a handful of NA cells are planted so ingestion's row-dropping
path is exercised (two in selected columns, one in the unselected w column).
y mixes a sine, a parabola, and two linear terms so the spline stage has
real curvature to find while x3 and x4 stay essentially linear.
"""

import numpy as np

N = 246
rng = np.random.default_rng(42)

x1 = rng.uniform(0.0, 1.0, N)
x2 = rng.uniform(0.0, 1.0, N)
x3 = rng.normal(2.0, 1.2, N)
x4 = 0.6 * x3 + rng.normal(0.0, 1.0, N)   # correlated with x3
w = rng.uniform(10.0, 20.0, N)            # extra column, never selected
eps = rng.normal(0.0, 0.35, N)

y = 3.0 * np.sin(2.0 * np.pi * x1) + 2.0 * (x2 - 0.5) ** 2 \
    + 0.8 * x3 + 0.4 * x4 + eps

cells = [["y", "x1", "x2", "x3", "x4", "w"]]
for i in range(N):
    row = [y[i], x1[i], x2[i], x3[i], x4[i], w[i]]
    cells.append([repr(float(v)) for v in row])

# Missing cells: rows 10 and 100 in selected columns, row 20 only in w.
cells[11][1] = "NA"
cells[101][4] = ""
cells[21][5] = "NA"

with open("data/synthetic.csv", "w", newline="\n") as fh:
    for row in cells:
        fh.write(",".join(row) + "\n")

print(f"wrote data/synthetic.csv ({N} data rows)")
