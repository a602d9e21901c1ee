# Triangular and trapezoidal fuzzy numbers: arithmetic, alpha-cuts, centroids.
import numpy as np

from fuzzlin import TFN, TpFN, alpha_cut, cog_of_cogs, cog_tfn, cog_tpfn, dof, rank

x = TFN(2, 3, 5)
y = TFN(1, 4, 6)
print("x + y      =", x + y)
print("x - y      =", x - y)
print("-2 * x     =", -2 * x)   # a negative factor flips the order of the entries
print("x + 10     =", x + 10)

# alpha-cuts shrink towards the peak as alpha grows
for a in (0.25, 0.5, 1.0):
    cut = alpha_cut(x, a)
    print(f"alpha={a:.2f}  [{cut.lo:.3f}, {cut.hi:.3f}]")

# membership curve of a trapezoid, sampled on a grid
t = TpFN(47, 64.2, 79, 86.6)
grid = np.linspace(40, 90, 11)
from fuzzlin import membership
print(np.round([membership(t, g) for g in grid], 3))

# two ways to defuzzify a trapezoid
print("centroid        ", cog_tpfn(t))
print("COG of the COGs ", cog_of_cogs(t))
print("rank, dof       ", rank(t), dof(t))

# a trapezoid whose plateau collapses to a point behaves like the triangle
print(cog_tpfn(TpFN(2, 3, 3, 5)), cog_tfn(x))
