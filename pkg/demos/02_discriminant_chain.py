"""From the Bogomolov-type bound to the slope bound, one rank at a time."""

from fractions import Fraction

from ellfib import chern, p1bundles
from ellfib.chern import FibrationInvariants

n, d = 4, 3
F = FibrationInvariants.from_delta(n, d, delta=-9)
print(F, F.slope)

for r in range(1, n):
    # V sits in 0 -> O(-D) -> V -> f^* W -> 0 with W of rank r
    V = chern.universal_extension(n, r, delta_w=-2, delta=F.delta, d=d)
    print("r =", r, V.to_dict(), "lower bound", chern.cthm1_bound(r + 1, -n, d, over_p1=True))
    gap = chern.slope_gap_from_cthm1(n, r, d)
    assert gap == p1bundles.admissibility_bound(n, r, d)
    print("   mu(W) - mu <=", gap, "=", float(gap))

# chi(End V) through the spectral cover, with torsion length t
for t in range(3):
    chi = chern.euler_char_end(r=3, e=3, d=d, gamma=chern.gamma_bound(3, over_p1=True), torsion_length=t)
    print("t =", t, "Delta >=", 9 * d - chi)

for n in (2, 3, 4, 5):
    th = chern.d2_thresholds(n, d=6)
    print(n, th.h1_bound, th.basepoint_bound, th.char_assumption)

print(Fraction(chern.discriminant(chern.DiscriminantData(2, 4, 3))))
