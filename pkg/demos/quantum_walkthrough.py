"""Skew derivations with grading automorphisms, and where order zero breaks."""
from fractions import Fraction

from ncdiff import catalog, exprio, oracle
from ncdiff.freealg import Bicharacter
from ncdiff.qops import QCalculus, QDelKey

cfg = exprio.SessionConfig(n=2, mode="quantum")
calc = QCalculus(2, Bicharacter.symbolic(2))
F1 = Fraction(1)

# a skew derivation twisted by e2 produces q-integers on powers of x1
d = QDelKey((1,), ((0, 1),), ((),))
for m in range(1, 5):
    print(f"x1^{m} ->", exprio.format_element(calc.del_apply(d, {(1,) * m: F1}), 2))

print("sigma moves past lam:", exprio.format_value(exprio.parse_value("sigma[(1,0)]*lam[x1]", cfg), cfg))

# the twisted bracket of two order-one skew derivations is not a combination of
# lambda rho sigma terms for any grading: it always lowers x1-degree by two
col = QCalculus(2, Bicharacter.colour(2))
d1 = catalog.qone(QDelKey((1,), ((1, 0),), ((),)))
d2 = catalog.qone(QDelKey((1,), ((0, 1),), ((),)))
g = catalog.counterexample_gamma(col)[0]
br = col.commutator_gamma(d1, d2, g)
print("bracket on x1*x1:", exprio.format_element(col.apply(br, {(1, 1): F1}), 2))
print("bracket vanishes on words up to length 4:", oracle.eval_equal(br, {}, col.apply, 4, 2).equal)
