"""Low homotopy groups from long exact sequences that are pinned by zeros."""

from grasscert import CP, GrassOdd, first_difference, grass_fibration, hopf, homotopy_table_of, les_base

fib = hopf(5)
cp5 = les_base(homotopy_table_of(fib.fiber, 11), homotopy_table_of(fib.total, 11), 11)
print("pi(CP_5)   =", cp5)

fib = grass_fibration(7)
g7 = les_base(homotopy_table_of(fib.fiber, 11), homotopy_table_of(fib.total, 11), 11)
print("pi(G2+R^7) =", g7)        # ? marks entries the sequence does not decide
print("first difference at level", first_difference(cp5, g7))

for k in range(2, 6):
    a, b = homotopy_table_of(GrassOdd(k), 4 * k - 1), homotopy_table_of(CP(2 * k - 1), 4 * k - 1)
    print(f"k={k}: G2+R^{2 * k + 1} vs CP_{2 * k - 1} differ at", first_difference(a, b))
