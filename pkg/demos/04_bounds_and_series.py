"""Explicit bounds and the exact q-expansion oracle."""

from etaq import (
    factor_level_bound,
    quasi_weight_bound,
    parse,
    qexp,
    exponent_norm_bound,
    min_level_bound,
    doubling_product,
    verify_identity,
)

# factor levels of a weight-1 quotient divide lcm(level, 12)
f = parse("1:1,2:1,3:-1,6:1")
print("factor-level bound for", f, "->", factor_level_bound(f))

# the closed-form bound on the least factorization level
rep = min_level_bound(6, 2)
print("\nbound ingredients: R =", rep.R, " doubling_product =", rep.doubling_product)
print("bound =", rep.bound)
print("log2(bound) ~", round(rep.log2_bound, 2))
print("weight-free variant at N=4 uses k = quasi_weight_bound(4) =", quasi_weight_bound(4))
print("exponent_norm_bound(1, 4) =", exponent_norm_bound(1, 4), " doubling_product(6) =", doubling_product(6))

# expansions live on a fractional grid with integer coefficients; the
# reciprocal of the basic factor generates the partition numbers
qs = qexp(parse("1:-1"), 24 * 10)
print("\npartition numbers:", [qs.coeffs[24 * n] for n in range(11)])

# identities certified by exact series comparison
lhs = f
rhs = [parse("1:1,2:-1,3:-1,4:1,6:2,12:-1"), parse("2:2,4:-1,6:-1,12:1")]
print("\nseries check of a two-factor identity:", verify_identity(lhs, rhs, 240))
