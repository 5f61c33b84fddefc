"""Factorization search: witnesses, factor lists, and verdicts.

Factors of a holomorphic quotient f on a level M are integer lattice points
in a box of candidate order vectors; the search is complete per level, so
None is a proof that nothing factors there.
"""

from etaq import (
    all_factors_on,
    decide_irreducible,
    factorize_on,
    min_factorization_level,
    parse,
    quasi_irreducible,
    structured_factor_search,
)

f = parse("1:1,2:1,3:-1,6:1")
w = factorize_on(f, 6)
print("f =", f)
print("splits on level 6 as", w.g, "*", w.h)
print("every factor on level 6:", [str(g) for g in all_factors_on(f, 6)])
print("least level with a factorization:", min_factorization_level(f, 24))

# a level-4 quotient whose canonical witness is a pair of level-4 factors
g = parse("1:-2,2:8,4:-2")
wg = factorize_on(g, 4)
print("\ng =", g)
print("splits on level 4 as", wg.g, "*", wg.h)

# prime-power levels are completely decidable
h = parse("1:-1,5:5")
print("\nh =", h)
print("quasi-irreducible:", quasi_irreducible(h))
print("verdict:", decide_irreducible(h, 500))

# one-cusp candidate factors give a cheap pre-screen
sq = h * h
print("\none-cusp factors of h^2:", [str(c) for c in structured_factor_search(sq)])

# a composite level settled by projecting to an exact divisor
big = parse("1:-1,2:2,3:2,4:-1,5:5,6:-5,10:-10,12:2,15:-10,20:5,30:25,60:-10")
print("\nbig =", big)
print("verdict:", decide_irreducible(big, 240))
