"""Multiplicative arithmetic over the divisor lattice.

Everything downstream indexes matrices and vectors by the divisors of a
level, so the divisor order has to be fixed once and for all.  The canonical
order used throughout this package sorts divisors by their prime-exponent
tuples with the exponent of the *smallest* prime varying fastest, e.g.

    divisors(12) == [1, 2, 4, 3, 6, 12]

This is exactly the index order induced by building block matrices per prime
power and combining them with Kronecker products, largest prime outermost.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

__all__ = [
    "ArithProfile",
    "arith_profile",
    "divisors",
    "exact_divisors",
    "factorization",
    "gcexd",
    "is_prime_power",
    "odot",
    "phi",
    "phihat",
    "psi",
    "rad",
]

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


@lru_cache(maxsize=None)
def factorization(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n as ((p, e), ...) with primes ascending.

    Trial division with a 2/3/5 wheel; intended for desk-scale inputs.
    """
    if n < 1:
        raise ValueError(f"positive integer required, got {n}")
    out = []
    for p in (2, 3, 5):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p, i = 7, 0
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += _WHEEL[i]
        i = (i + 1) % 8
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All divisors of n in the canonical order (see module docstring)."""
    divs = [1]
    for p, e in factorization(n):
        divs = [d * p**j for j in range(e + 1) for d in divs]
    return tuple(divs)


@lru_cache(maxsize=None)
def exact_divisors(n: int) -> tuple[int, ...]:
    """Divisors d of n with gcd(d, n/d) = 1, in canonical order."""
    return tuple(d for d in divisors(n) if gcd(d, n // d) == 1)


def rad(n: int) -> int:
    """Squarefree kernel: product of the distinct primes dividing n; rad(1) = 1."""
    r = 1
    for p, _ in factorization(n):
        r *= p
    return r


def phi(n: int) -> int:
    """Euler's totient."""
    out = 1
    for p, e in factorization(n):
        out *= p ** (e - 1) * (p - 1)
    return out


def psi(n: int) -> int:
    """Index of the congruence subgroup of level n: n * prod(1 + 1/p)."""
    out = n
    for p, _ in factorization(n):
        out = out // p * (p + 1)
    return out


def phihat(n: int) -> int:
    """n * prod over p | n of (p - 1/p); equals p^(e+1) - p^(e-1) on prime powers."""
    out = n
    for p, _ in factorization(n):
        out = out // p * (p * p - 1)
    return out


@dataclass(frozen=True)
class ArithProfile:
    """The multiplicative data of n consumed by the order machinery."""

    n: int
    rad: int
    omega: int
    phi: int
    psi: int
    phihat: int


def arith_profile(n: int) -> ArithProfile:
    fac = factorization(n)
    return ArithProfile(
        n=n,
        rad=rad(n),
        omega=len(fac),
        phi=phi(n),
        psi=psi(n),
        phihat=phihat(n),
    )


def odot(d1: int, d2: int) -> int:
    """lcm(d1, d2) / gcd(d1, d2): the boolean group law on exact divisors."""
    if d1 < 1 or d2 < 1:
        raise ValueError("odot takes positive integers")
    return lcm(d1, d2) // gcd(d1, d2)


def gcexd(m: int, n: int) -> int:
    """Greatest common exact divisor: the largest e with e || m and e || n.

    e || x means e | x and gcd(e, x/e) = 1, so e collects the primes whose
    multiplicity agrees in m and n.
    """
    fm = dict(factorization(m))
    out = 1
    for p, e in factorization(n):
        if fm.get(p) == e:
            out *= p**e
    return out


def is_prime_power(n: int) -> bool:
    """True for n = p^e with e >= 1 (1 is not counted)."""
    return len(factorization(n)) == 1 and n > 1
