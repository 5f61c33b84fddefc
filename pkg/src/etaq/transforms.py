"""Structural maps between eta quotients.

Three maps: the exponent-level Atkin-Lehner involution (an index permutation
by an exact divisor), the level-lowering projection from level M to a
divisor N (rational exponents in general, integral when N exactly divides
M), and the composition of coprime-level quotients by exponent tensor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping

from .eta import EtaQuotient
from .numth import divisors, odot
from .orders import order_vector24_rational

__all__ = ["LoweredQuotient", "atkin_lehner", "compose", "lower"]


def atkin_lehner(f: EtaQuotient, n: int, N: int) -> EtaQuotient:
    """The involution sending the index-d factor to index n (.) d, for n || N."""
    if N % n or gcd(n, N // n) != 1:
        raise ValueError(f"{n} is not an exact divisor of {N}")
    if N % f.level:
        raise ValueError(f"level {f.level} of the quotient does not divide {N}")
    return EtaQuotient({odot(n, d): e for d, e in f.items()})


@dataclass(frozen=True)
class LoweredQuotient:
    """Image of a level-M quotient under the projection to level N.

    Exponents are exact rationals; ``integral`` records whether they all
    happen to be integers (always the case when N exactly divides M).
    """

    level: int
    exponents: Mapping[int, Fraction]
    integral: bool

    def to_eta(self) -> EtaQuotient:
        if not self.integral:
            raise ValueError("lowered quotient has non-integral exponents")
        return EtaQuotient({d: int(e) for d, e in self.exponents.items()})

    @property
    def weight2(self) -> Fraction:
        return sum(self.exponents.values(), Fraction(0))

    @property
    def is_one(self) -> bool:
        return not self.exponents

    def order_vector24(self) -> dict[int, Fraction]:
        return order_vector24_rational(self.exponents, self.level)


def lower(f: EtaQuotient, M: int, N: int) -> LoweredQuotient:
    """Project f from level M down to level N | M.

    The exponent at d | N collects every index t | M with gcd(t, N) = d,
    weighted by d * u / t where u is the largest divisor of t coprime to
    d.  The projection fixes quotients whose level already divides N,
    preserves weight when N || M, and preserves holomorphy for every N | M.
    """
    if M % f.level:
        raise ValueError(f"level {f.level} of the quotient does not divide {M}")
    if M % N:
        raise ValueError(f"{N} does not divide {M}")
    exps = f.exponents()
    out: dict[int, Fraction] = {}
    for t in divisors(M):
        x = exps.get(t)
        if not x:
            continue
        d = gcd(t, N)
        td = t
        g = gcd(td, d)
        while g > 1:
            td //= g
            g = gcd(td, d)
        out[d] = out.get(d, Fraction(0)) + Fraction(d * td, t) * x
    cleaned = {d: v for d, v in out.items() if v}
    integral = all(v.denominator == 1 for v in cleaned.values())
    return LoweredQuotient(level=N, exponents=cleaned, integral=integral)


def compose(f: EtaQuotient, g: EtaQuotient) -> EtaQuotient:
    """Tensor of exponent vectors for coprime levels.

    The 24-scaled order vector of the result is the entrywise product
    a(t*t') = a_f(t) * a_g(t') over cusp denominators of the two levels.
    """
    if gcd(f.level, g.level) != 1:
        raise ValueError(
            f"levels {f.level} and {g.level} are not coprime"
        )
    return EtaQuotient(
        {d * dd: e * ee for d, e in f.items() for dd, ee in g.items()}
    )
