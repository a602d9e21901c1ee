# Grading a group three ways: GPA, a triangular mean and a trapezoidal mean.
from fuzzlin.assessment import (
    DEFAULT_SCALE,
    RIGOROUS_SCALE,
    GradeDistribution,
    ScoreSheet,
    classify_mean,
    distribution_of_sheet,
    gpa,
    group_mean_tpfn,
    mean_performance_tfn,
    member_tpfn,
)

for g in reversed(list(DEFAULT_SCALE.intervals)):
    print(g.name, DEFAULT_SCALE.tfn(g))

# two departments with the same GPA
d1 = GradeDistribution(n_A=60, n_B=40, n_C=20, n_D=30, n_F=20)
d2 = GradeDistribution(n_A=60, n_B=90, n_C=45, n_D=45, n_F=15)
for name, d in [("D1", d1), ("D2", d2)]:
    m, x = mean_performance_tfn(DEFAULT_SCALE, d)
    print(f"{name}: n={d.n}  GPA={gpa(d):.4f}  mean TFN={m}  X={x:.4f}  -> {classify_mean(DEFAULT_SCALE, x).name}")

# a five-player team scored over six games
sheet = ScoreSheet.from_scores([
    [43, 48, 49, 49, 50, 52],
    [81, 83, 85, 88, 91, 95],
    [76, 82, 89, 95, 95, 98],
    [86, 86, 87, 87, 87, 88],
    [35, 40, 44, 52, 59, 62],
])
team = distribution_of_sheet(DEFAULT_SCALE, sheet)
print(team.to_mapping(), "GPA", round(gpa(team), 4))
members = [member_tpfn(DEFAULT_SCALE, s) for _, s in sheet.members]
for name, m in zip([n for n, _ in sheet.members], members):
    print(name, m.astuple())
p, x = group_mean_tpfn(members)
print("team TpFN", p.astuple(), "X =", round(x, 4), classify_mean(DEFAULT_SCALE, x).name)

# the same sheet under a stricter scale
team = distribution_of_sheet(RIGOROUS_SCALE, sheet)
print("rigorous:", team.to_mapping(), "GPA", round(gpa(team), 4))
