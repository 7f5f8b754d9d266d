"""Twisted derivations under a colour bicharacter q_ji = 1/q_ij."""
from fractions import Fraction

from ncdiff import betaops as bo, exprio
from ncdiff.diffops import Del, Lam

cfg = exprio.SessionConfig(n=2, mode="beta", colour=True)
ctx = bo.BetaContext.colour(2)
show = lambda op: exprio.format_operator(op, 2, "beta")
F1 = Fraction(1)

print("twisted commutator [x1,x2]_b =", exprio.format_value(exprio.parse_value("[x1,x2]_b", cfg), cfg))

k = Del((1,), ((),))
print("bdel[(1);(1)] on x2*x1:", exprio.format_element(ctx.eval({k: F1}, {(2, 1): F1}), 2))

# bracket with a left multiplication, computed and from the swap rule
I, A, b = (2, 1), ((), (2,)), (1, 2)
lhs = ctx.calc.bracket({Del(I, A): F1}, {Lam(b): F1})
rhs = bo.swap_operator(bo.lambda_swap(I, A, b, ctx), "lambda", ctx)
printed = bo.swap_operator(bo.lambda_swap_printed(I, A, b, ctx), "lambda", ctx)
print("swap rule matches the bracket:", bo.beta_equal(lhs, rhs, ctx))
print("displayed variant matches:", bo.beta_equal(lhs, printed, ctx))

# the twisted shuffle product gives the top part of a composite
J, B = (1,), ((1,),)
diff = ctx.calc.compose({Del(I, A): F1}, {Del(J, B): F1})
top = bo.beta_shuffle_top(I, A, J, B, ctx)
print("order of composite minus twisted shuffle:",
      ctx.calc.order({k: diff.get(k, 0) - top.get(k, 0) for k in set(diff) | set(top)}))
