"""Truncated polynomial rings: CP_5 next to the Grassmannian of oriented planes in R^7."""

from grasscert import CP, GrassOdd, presentation_of, ring_of
from grasscert.distinguish import invariants_of

g7, cp5 = ring_of(GrassOdd(3)), ring_of(CP(5))
print(presentation_of(GrassOdd(3)).to_text())

for d in range(11):
    print(d, g7.group(d), g7.basis_labels(d), "|", cp5.group(d), cp5.basis_labels(d))

# same groups, different multiplication
x = g7.gen("x2")
print("x2^3 =", x ** 3)              # 2*x6: the cube is divisible by 2
print("x2^3 in CP_5 =", cp5.gen("x2") ** 3)

print("power indices G2+R^7:", invariants_of(g7).power_indices)
print("power indices CP_5:  ", invariants_of(cp5).power_indices)
