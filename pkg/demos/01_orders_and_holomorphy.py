"""Cusp orders, holomorphy, and the order matrix.

An eta quotient is a finite product of rescaled eta factors, written here
as comma-separated index:exponent pairs.  Its behaviour at the cusps of its
level is all linear algebra: one integer matrix per level.
"""

from etaq import (
    divisors,
    is_holomorphic,
    order_matrix,
    order_vector,
    parse,
    weight_from_orders,
)

f = parse("1:1,2:1,3:-1,6:1")
print("f            =", f)
print("level        =", f.level)
print("weight (x2)  =", f.weight2)

# 24-scaled orders at the cusps 1/t of level 6
ov = order_vector(f, 6)
print("orders (x24) =", ov.orders24)
print("holomorphic  =", is_holomorphic(f))

# the same orders come from one matrix-vector product
om = order_matrix(6)
print("divisors of 6 in canonical order:", om.divisors)
for t, row in zip(om.divisors, om.entries):
    print(f"  row t={t}:", row)

# the weighted order sum recovers the weight: this is the valence identity
print("weight recovered from orders:", weight_from_orders(ov))

# a quotient with a negative cusp order is not holomorphic
g = parse("1:1,3:-1")
print("g =", g, "orders:", order_vector(g).orders24, "->", is_holomorphic(g))

# canonical divisor order interleaves prime powers (smallest prime fastest)
print("divisors(12):", divisors(12))
