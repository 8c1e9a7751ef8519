"""Double and triple covers realizing the sharp D^2 thresholds."""

from ellfib import model_surfaces as ms

# the intersection ring of P(O + O(1) + O(3)) over P^1
X = ms.ProjBundleSpace([1, 3])
xi, P = X.xi(), X.fiber()
print("xi^3 =", ms.intersect(X, [xi, xi, xi]), " xi^2 P =", ms.intersect(X, [xi, xi, P]))

cov = ms.triple_cover(a=1, b=3, N=9)
print(cov.to_dict())
for t in range(-1, 4):
    S = X.cls(1, t)
    print(t, cov.d_squared(t), ms.intersect(X, [S, S, X.cls(3, 9)]), cov.h1_nonzero(t), cov.has_basepoint(t))

# h^1 of O(xi + tP) jumps at t = max drop - 2
for t in range(-2, 3):
    print(t, ms.leray_cohomology(X, 1, t))

for row in ms.numerology_table("n2", dmax=6):
    print(row)
for row in ms.numerology_table("n3", dmax=6):
    print(row)

# divisors on a rational elliptic surface with trivial pushforward
for n in range(1, 8):
    print(ms.rational_surface_divisor(n).to_dict())
