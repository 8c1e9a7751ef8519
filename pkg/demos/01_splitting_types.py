"""Admissible splitting types of R^1 f_* O_Y(-D) over P^1."""

from ellfib import p1bundles as pb
from ellfib.p1bundles import SplittingType

# order 2, d = 5: the normalized types (-d, a - d) survive for a <= d - 1
d = 5
for a in range(0, d + 2):
    S = SplittingType([-d, a - d])
    print(a, S, pb.is_admissible(S, d), pb.admissibility_violations(S, d))

# order 3: every admissible type of degree -12 when d = 4
for S in pb.enumerate_admissible(3, 4, -12):
    print(S, "gap", S.twists[-1] - S.twists[0], "rigid", pb.is_rigid(S))

# the slope bounds themselves, general vs over P^1
for r in range(1, 4):
    print(r, pb.admissibility_bound(4, r, 6, over_p1=False), pb.admissibility_bound(4, r, 6))

# two ways to bound the total gap
S = SplittingType([-6, -4, -3])
print(pb.remark_bounds(S, 6), pb.coarse_gap_bound(6))

# Sym^2 of O + O(-1) + O(-2) and its cohomology after twisting
sym = pb.sym_power([0, -1, -2], 2)
print(sym, pb.cohomology(sym, 1))
