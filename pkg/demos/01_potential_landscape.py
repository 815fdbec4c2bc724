#!/usr/bin/env python3
"""Shape of the combined well: harmonic oscillator plus a linear field term.

Walks the four (M, omega0) parameter sets used throughout the package over
field strengths eps in {0, 0.5, 1, 2}, shows how the well bottom slides to
r0 = q eps / (M w0^2) and deepens to -q^2 eps^2 / (2 M w0^2), and writes
gnuplot-ready curves (two columns r,V per file) under demos/out/.
"""

from pathlib import Path

import numpy as np

from hostark import ModelParams, derived_constants, eval_potential, potential_curve

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

PARAM_SETS = {
    "a": dict(M=1.0, omega0=1 / 2.4),
    "b": dict(M=1.5, omega0=1 / 2.4),
    "c": dict(M=1.0, omega0=1.0),
    "d": dict(M=1.5, omega0=1.0),
}

print("well bottom r0 and depth -g_shift for each parameter set")
print(f"{'set':>4} {'eps':>5} {'r0':>10} {'-g_shift':>12} {'V(r0)':>12}")
for tag, kw in PARAM_SETS.items():
    for eps in (0.0, 0.5, 1.0, 2.0):
        p = ModelParams(eps=eps, **kw)
        dc = derived_constants(p)
        v_bottom = eval_potential(p, dc.r0)
        print(f"{tag:>4} {eps:>5.1f} {dc.r0:>10.4f} {-dc.g_shift:>12.4f}"
              f" {v_bottom:>12.4f}")

        curve = potential_curve(p, r_max=15.0, samples=600)
        path = OUT / f"potential_{tag}_eps{eps:.1f}.csv"
        np.savetxt(path, curve, delimiter=",", header="r,V", comments="")

print(f"\ncurves written to {OUT}/potential_*.csv")
print("plot e.g.:  gnuplot -e \"set datafile separator ','; "
      "plot 'demos/out/potential_a_eps2.0.csv' using 1:2 with lines; pause -1\"")

# the completed-square identity behind the table above
p = ModelParams(M=1.5, omega0=1 / 2.4, eps=2.0)
dc = derived_constants(p)
r = np.linspace(0, 15, 7)
direct = eval_potential(p, r)
square = 0.5 * p.M * p.omega0**2 * (r - dc.r0) ** 2 - dc.g_shift
print("\ncompleted-square identity, max |difference| over a sample grid:",
      float(np.max(np.abs(direct - square))))
