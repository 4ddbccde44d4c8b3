"""Smith normal form and the group arithmetic built on it."""

from grasscert.abelian import (FGAbelianGroup, IntMatrix, PresentedHom, cokernel, extensions, kernel,
                               smith_normal_form)

m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
snf = smith_normal_form(m)
print("D =", snf.D.tolist())          # diag(2, 6, 12)
print("U M V == D:", snf.U @ IntMatrix.from_rows(m) @ snf.V == snf.D)

# the cokernel of M is the group it presents
Z3 = FGAbelianGroup(3)
f = PresentedHom(Z3, Z3, m)
print("coker =", cokernel(f))
print("ker   =", kernel(f))

# multiplication by 2 on Z, and what it leaves behind
two = PresentedHom(FGAbelianGroup(1), FGAbelianGroup(1), [[2]])
print("coker(x2) =", cokernel(two))

# extension problems: Z under Z/2 is forced to split the other way round
print("0 -> Z -> ? -> Z/2 -> 0:", [str(g) for g in extensions(FGAbelianGroup(1), FGAbelianGroup(0, (2,)))])
print("0 -> Z/2 -> ? -> Z -> 0:", [str(g) for g in extensions(FGAbelianGroup(0, (2,)), FGAbelianGroup(1))])
