"""Structural maps: involutions, level lowering, and composition."""

from etaq import atkin_lehner, one_cusp_quotient, compose, lower, parse

f = parse("1:1,2:1,3:-1,6:1")

# the involution by an exact divisor permutes the rescaling indices
print("f          =", f)
print("al_{6,6} f =", atkin_lehner(f, 6, 6))
print("al_{2,6} f =", atkin_lehner(f, 2, 6))
print("applied twice:", atkin_lehner(atkin_lehner(f, 6, 6), 6, 6))

# a factorization on a bigger level projects to one on a smaller level
g12 = parse("1:-2,2:5,3:1,4:-2,6:-2,12:1")
h12 = parse("2:3,3:-1,6:2,12:-1")
print("\nlevel-12 factors of a level-4 quotient:")
print("  product    =", g12 * h12)
print("  projected  =", lower(g12, 12, 4).to_eta(), "*", lower(h12, 12, 4).to_eta())

# lowering to a non-exact divisor can leave fractional exponents
low = lower(parse("4:1"), 4, 2)
print("\nlowering eta_4 to level 2:", dict(low.exponents), "integral:", low.integral)

# a twelve-exponent quotient of level 60 collapses to two exponents on level 5
big = parse("1:-1,2:2,3:2,4:-1,5:5,6:-5,10:-10,12:2,15:-10,20:5,30:25,60:-10")
print("\nbig lowered to level 5:", lower(big, 60, 5).to_eta())

# composition tensors exponents across coprime levels; the one-cusp
# generators compose to one-cusp generators
print("\ncompose:", compose(parse("1:2,2:-1"), parse("1:3,3:-1")))
print("one-cusp generators:", one_cusp_quotient(4, 4), "(*)", one_cusp_quotient(3, 3), "=", compose(one_cusp_quotient(4, 4), one_cusp_quotient(3, 3)))
print("directly at level 12:", one_cusp_quotient(12, 12))
