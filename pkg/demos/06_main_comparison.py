"""Same cohomology groups, different spaces: the full comparison."""

from grasscert import CP, GrassOdd, full_report

print(full_report(GrassOdd(3), CP(5), 11).to_text())

for k in range(2, 9):
    rep = full_report(GrassOdd(k), CP(2 * k - 1), 4 * k - 1)
    print(f"k={k}: {rep.verdict}; cup powers differ at j={rep.ring_distinguished['j']}, "
          f"pi differs at {rep.pi_first_difference}")
