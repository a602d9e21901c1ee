# Fuzzy LP: rank the coefficients, solve, rebuild fuzzy answers, audit them.
from fuzzlin import TFN, TpFN, FuzzyLinearProgram, RefuzzSpec, crispify, solve_fuzzy
from fuzzlin.flp import refuzzify_tpfn, tfn_family, tpfn_alpha_bounds, tpfn_b_bounds

furniture = FuzzyLinearProgram("max", (TFN(2.7, 3, 3.3), TFN(3.8, 4, 4.2)), [
    ((TFN(2, 2.5, 3), TFN(0.8, 1, 1.2)), "<=", TFN(19, 20, 21)),
    ((TFN(2.5, 3, 3.5), TFN(2, 3, 4)), "<=", TFN(29, 30, 31)),
    ((TFN(0.75, 1, 1.25), TFN(1.5, 2, 2.5)), "<=", TFN(15, 16, 17)),
])
print(crispify(furniture))
sol = solve_fuzzy(furniture, RefuzzSpec("tfn", 1, alpha={"x1": 3.5, "x2": 5.5}))
print("crisp optimum", sol.crisp.x, sol.crisp.objective)
for R in sol.crisp.x:
    print("  family", tfn_family(R, 1))
for name, f in sol.fuzzy_vars.items():
    print(" ", name, f)
for row in sol.audit.constraints:
    flag = "VIOLATED" if row.violated else "ok"
    print(f"  constraint {row.index + 1}: worst lhs {row.worst_lhs:g} vs {row.rhs:g}  {flag}")

diet = FuzzyLinearProgram("min", (TpFN(38, 39, 41, 42), TpFN(17, 18, 22, 23), TpFN(55, 56, 64, 65)), [
    ((TpFN(1.5, 1.8, 2.2, 2.5), TpFN(3.2, 3.5, 4.5, 4.8), TpFN(1.7, 1.9, 2.1, 2.3)), ">=", TpFN(22, 23, 25, 26)),
    ((TpFN(4, 4.5, 5.5, 6), TpFN(0.6, 0.8, 1.2, 1.4), TpFN(0.8, 0.9, 1.1, 1.2)), ">=", TpFN(6, 7, 9, 10)),
])
sol = solve_fuzzy(diet, RefuzzSpec("tpfn", 2, alpha={"x1": 1 / 9}, b={"x1": 15 / 63}))
print("crisp optimum", [round(v, 6) for v in sol.crisp.x], round(sol.crisp.objective, 6))
R = sol.crisp.x[0]
print("  alpha range for x1", tpfn_alpha_bounds(R, 2), "b range at 1/9", tpfn_b_bounds(R, 2, 1 / 9))
for name, f in sol.fuzzy_vars.items():
    print(" ", name, f)
for code, message in sol.notes:
    print(f"  [{code}] {message}")
print(refuzzify_tpfn(10, 3))
