"""Even Grassmannians: three relation lists and what each one computes."""

from grasscert import GrassEven, S2xS2, presentation_of, ring_of
from grasscert.catalog import expected_betti
from grasscert.distinguish import isomorphism_search
from grasscert.grading import integrate, validate_homogeneous

k = 4
s = GrassEven(k)
for variant in ("verbatim", "amended", "corrected"):
    p = presentation_of(s, variant)
    r = ring_of(s, variant)
    print(f"--- {variant}")
    for v in validate_homogeneous(p):
        print("  ", v)
    print("   ranks:", r.poincare_series())
print("expected:", expected_betti(s))

# the middle cup form decides between the last two
for variant in ("amended", "corrected"):
    r = ring_of(s, variant)
    o = r.top_class()
    x, y = r.gen("xm6"), r.gen("ym6")
    form = [[integrate(r, a * b, o) for b in (x, y)] for a in (x, y)]
    print(variant, "middle form", form)

# for k = 2 only the hyperbolic form matches S^2 x S^2
for variant in ("amended", "corrected"):
    w = isomorphism_search(ring_of(GrassEven(2), variant), ring_of(S2xS2), 2)
    print(f"G2+R^4 [{variant}] ~ S2xS2:", w)
