"""Singular functions: level-set capacities and pole growth.

A p-singular function G on a ball is built from the capacity minimizer
of a tiny ring around the pole, rescaled so that every level pair
(a, b) satisfies cap * (b - a)^(p-1) = const.  Checking that constancy
is a sharp self-test of the construction.  Refining the grid probes the
blow-up at the pole: logarithmic in the plane at p = Q = 2, bounded on
the line where p exceeds Q = 1.
"""

from ringcap import (
    blowup_trend,
    build_euclidean_grid,
    build_green,
    check_level_sets,
)

levels = []
for h in (0.04, 0.028, 0.02):
    sp = build_euclidean_grid(2, 1.05, h)
    c = sp.nearest_node([0.0, 0.0])
    levels.append((sp, sp.ball(c, 1.0), c))
trend = blowup_trend(levels, 2.0, 2.0)

print("plane, p = 2: pole value under refinement")
for h, g in zip(trend.resolutions, trend.max_values):
    print(f"  h = {h:.3f}: max G = {g:.4f}")
print(f"  fits c1 + c2*log(1/h) with relative residual "
      f"{trend.log_residual:.2%}")
print()

sp, dom, c = levels[-1]
sf = build_green(sp, dom, c, 2.0)
m = sf.max_value
pairs = [(0.0, m), (0.1 * m, 0.5 * m), (0.2 * m, 0.8 * m), (0.5 * m, 0.9 * m)]
rep = check_level_sets(sp, sf, pairs)
print("level pairs (a, b) and their normalized capacities:")
for a, b, cap, ratio in rep.entries:
    print(f"  ({a:.3f}, {b:.3f}): cap = {cap:7.3f}   "
          f"cap*(b-a)^(p-1) = {ratio:.3f}")
print(f"  band (max/min) = {rep.band:.3f}; a true singular kernel keeps "
      f"this near 1")
print()

lev1 = []
for h in (0.04, 0.028, 0.02):
    sp = build_euclidean_grid(1, 1.05, h)
    c = sp.nearest_node([0.0])
    lev1.append((sp, sp.ball(c, 1.0), c))
t1 = blowup_trend(lev1, 2.0, 1.0)
vals = ", ".join(f"{g:.3f}" for g in t1.max_values)
print(f"line, p = 2 > Q = 1: pole values {vals} -> bounded "
      f"({'yes' if t1.bounded else 'no'})")
