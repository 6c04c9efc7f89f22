"""The tropical line and the amoeba that collapses onto it.

Run:  python3 demos/05_tropical_line_and_amoeba.py
Writes amoeba_h1.csv / amoeba_h01.csv next to the current directory, and
tropical_line.png when matplotlib is importable.
"""

import math

from tropikit import amoeba_line_sample, tropical_curve_2d
from tropikit.fileio import format_points, write_text

# The tropical polynomial max(x, y, 0) fails to be smooth exactly where the
# max is attained twice: three rays out of the origin.
curve = tropical_curve_2d([(0, (1, 0)), (0, (0, 1)), (0, (0, 0))])
print("corner locus of max(x, y, 0):")
for p in curve.pieces:
    print(f"  base {tuple(map(str, p.base))} direction {p.direction} t in [{p.t0}, {p.t1}]")

# The classical counterpart is the complex line x + y + 1 = 0.  Its image
# under (x, y) -> (h ln|x|, h ln|y|) is the amoeba; as h shrinks it deflates
# onto the tropical line above.
for h, name in ((1.0, "amoeba_h1.csv"), (0.1, "amoeba_h01.csv")):
    pts = amoeba_line_sample(h, 400)
    write_text(name, format_points(pts))

    def dist_to_skeleton(p):
        best = math.inf
        for d in ((1.0, 1.0), (-1.0, 0.0), (0.0, -1.0)):
            t = max(0.0, (p[0] * d[0] + p[1] * d[1]) / (d[0] ** 2 + d[1] ** 2))
            best = min(best, math.hypot(p[0] - t * d[0], p[1] - t * d[1]))
        return best

    worst = max(dist_to_skeleton(p) for p in pts)
    print(f"h = {h:<4g} max distance of amoeba sample to the skeleton: {worst:.4f}")

print("(the distance scales down linearly with h)")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5, 5))
    for h, color in ((1.0, "#bbccee"), (0.1, "#4477aa")):
        pts = amoeba_line_sample(h, 2000)
        ax.scatter(pts[:, 0], pts[:, 1], s=2, color=color, label=f"amoeba h={h}")
    for p in curve.pieces:
        x0, y0 = float(p.base[0]), float(p.base[1])
        dx, dy = p.direction
        ax.plot([x0, x0 + 4 * dx], [y0, y0 + 4 * dy], "k-", lw=1.5)
    ax.set_xlim(-4, 4)
    ax.set_ylim(-4, 4)
    ax.legend()
    ax.set_title("amoebas of x + y + 1 = 0 deflating onto the tropical line")
    fig.savefig("tropical_line.png", dpi=120)
    print("wrote tropical_line.png")
except ImportError:
    print("matplotlib not available; skipped the png")
