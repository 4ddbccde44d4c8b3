"""The two-row spectral sequence of S^1 -> V2R^n -> G2+R^n, page by page."""

from grasscert import GrassEven, GrassOdd, ring_of
from grasscert.catalog import additive_groups, circle_bundle_total
from grasscert.gysin import format_page, gysin_pipeline, required_d2_profile, verify_total

for base in (GrassOdd(3), GrassEven(4)):
    r = ring_of(base)
    e2, d2, lim = gysin_pipeline(r)
    total = circle_bundle_total(base)
    print(f"--- {base.label}, total space {total.label}")
    print(format_page(e2))
    print(format_page(lim))
    rep = verify_total(lim, additive_groups(total))
    print("total space groups verify:", rep.ok)

    # run it backwards: what must d2 be, given the Stiefel manifold?
    for c in required_d2_profile(r.groups(), additive_groups(total)):
        if c.kind != "zero":
            print(f"  d2 at p = {c.p}: {c}")
