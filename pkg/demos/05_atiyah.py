"""Endomorphism algebras of semistable bundles on an elliptic curve."""

from ellfib import atiyah
from ellfib.atiyah import AtiyahType

for blocks in ([[1], [1], [1]], [[3]], [[2, 1]], [[1, 1], [1]]):
    T = AtiyahType(blocks)
    print(T.blocks, "e =", T.e, "dim End =", atiyah.end_dimension(T), "commutative:", atiyah.is_commutative(T))

for e in range(1, 9):
    rep = atiyah.verify_reg_lemma(e)
    print(e, rep.checked, rep.commutative, rep.ok)
