"""Differential operators on the free algebra in two letters, step by step."""
from fractions import Fraction

from ncdiff import catalog, diffops as do, exprio, oracle

cfg = exprio.SessionConfig(n=2)
calc = cfg.calc
show = lambda op: exprio.format_operator(op, 2, "classical")
parse = lambda s: exprio.parse_operator(s, cfg)

# del_I^A removes letters x_{i1}..x_{ir} in order and drops a_1..a_r into the gaps
d = parse("del[(1,2);(1,1)]")
c = exprio.parse_element("x1*x2 - x2*x1", cfg)
print("del[(1,2);(1,1)] on the commutator:", exprio.format_element(calc.apply(d, c), 2))

# composing two order-one operators: the top part is the symmetrized pair
f, g = parse("del[(1);(x2)]"), parse("del[(2);(x1)]")
print("composite:", show(calc.compose(f, g)))

# right multiplication is not a separate generator
print("rho[x1] =", show(parse("rho[x1]")))

# two different-looking operators with the same canonical form
rel = parse("del[(1,2);(x2*x1,1)] - del[(1,2);(x1*x2,1)] - lam[x2]*del[(2);(1)] + del[(2);(x2)]")
print("known relation normalizes to:", show(calc.canonical(rel).to_normal()) or "0")

# at level three even a fixed index sequence carries a relation
rel3 = catalog.level_three_relation()
print("level-three relation:", show(rel3))
print("  vanishes on all words up to length 8:",
      oracle.kills_words(rel3, calc.apply, range(9), 2).equal)

# the fourteen displayed terms of a 2x2 product miss one when b1 contains the first indices
args = (1, 2, (), (), 1, 2, (1, 2), ())
lhs = calc.compose({do.Del((1, 2), ((), ())): Fraction(1)}, {do.Del((1, 2), ((1, 2), ())): Fraction(1)})
missing = do.op_sub(lhs, catalog.product_2x2_terms(*args, printed=True))
print("compose minus the fourteen terms:", show(calc.canonical(missing).to_normal()))

# any nonzero operator generates everything: commutators walk down to a unit
for step in do.simplicity_reduce(parse("lam[x1*x2] - rho[x1*x2]"), 2):
    print(f"  [., {step.kind} {step.index}] ->", show(step.result))
