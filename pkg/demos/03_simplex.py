# The dense-tableau simplex, step by step, and a minimisation solved through its dual.
import numpy as np

from fuzzlin import LinearProgram, dual, solve

np.set_printoptions(precision=4, suppress=True)

lp = LinearProgram("max", (3, 4), [
    ((2.5, 1), "<=", 20),
    ((3, 3), "<=", 30),
    ((1, 2), "<=", 16),
])
sol = solve(lp, trace=True)
for k, t in enumerate(sol.trace):
    print(f"-- tableau {k}  basis {t.basis_labels()}")
    print(t.matrix)
print(sol.status, sol.x, sol.objective, "unique" if sol.unique else "alternative optima")

diet = LinearProgram("min", (40, 20, 60), [
    ((2, 4, 2), ">=", 24),
    ((5, 1, 1), ">=", 8),
])
print(dual(diet))
sol = solve(diet, trace=True)
print("dual's final tableau:")
print(sol.final_tableau.matrix)
print("primal read off the net-evaluation row:", np.round(sol.x, 6), sol.objective)

# problems outside canonical form are reported, not guessed at
print(solve(LinearProgram("max", (1, 1), [((1, 1), "<=", 4), ((1, 0), ">=", 1)])).status)
