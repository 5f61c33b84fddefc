"""Cusp-order machinery: order matrices, order vectors, exact inverses.

All orders are stored 24-scaled, which keeps them integral for
integer-exponent quotients; the /24 only ever appears in formatting.  The
order matrix of level M is indexed by divisors(M) in the canonical order
and is assembled as a Kronecker product of prime-power blocks (largest
prime outermost), which is what makes the canonical order the natural one.

Cusps are represented by their denominator t | M only; the phi(gcd(t, M/t))
inequivalent cusps sharing a denominator all carry the same order, so the
multiplicity is kept as a weight instead of materializing the full cusp set.

Matrices and inverses are cached per level.  The caches are append-only and
all cached values are immutable, so concurrent readers are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Mapping

from .eta import EtaQuotient
from .numth import divisors, factorization, phi, phihat, psi

__all__ = [
    "NormalizedInverse",
    "OrderMatrix",
    "OrderVector",
    "one_cusp_quotient",
    "normalized_inverse",
    "is_holomorphic",
    "order_matrix",
    "order_vector",
    "order_vector24_rational",
    "weight_from_orders",
]


def _prime_power_block(p: int, e: int) -> list[list[int]]:
    # entry(i, j) = 24 * order of the index-p^j eta factor at the cusp 1/p^i
    return [
        [p ** (e + 2 * min(i, j) - j - min(2 * i, e)) for j in range(e + 1)]
        for i in range(e + 1)
    ]


def _prime_power_inverse(p: int, e: int) -> list[list[Fraction]]:
    # closed-form tridiagonal inverse; denominator phihat(p^e) throughout
    if e == 0:
        return [[Fraction(1)]]
    den = phihat(p**e)
    inv = [[Fraction(0)] * (e + 1) for _ in range(e + 1)]
    for i in range(e + 1):
        for j in range(e + 1):
            if i == j == 0 or i == j == e:
                num = p
            elif abs(i - j) == 1:
                num = -(p ** min(j, e - j))
            elif 0 < i == j < e:
                num = p ** min(j - 1, e - j - 1) * (p * p + 1)
            else:
                continue
            inv[i][j] = Fraction(num, den)
    return inv


def _kron(A, B):
    return [
        [a * b for a in row_a for b in row_b]
        for row_a in A
        for row_b in B
    ]


def _blocks(M: int, maker):
    # largest prime outermost so the Kronecker index order matches divisors(M)
    blocks = [maker(p, e) for p, e in reversed(factorization(M))]
    out = [[1]] if not blocks else blocks[0]
    for b in blocks[1:]:
        out = _kron(out, b)
    return out


@dataclass(frozen=True)
class OrderMatrix:
    """24-scaled cusp orders of the level-M eta factors, divisors x divisors."""

    level: int
    divisors: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]
    cusp_mult: Mapping[int, int]
    psi: int

    def entry(self, t: int, d: int) -> int:
        divs = self.divisors
        return self.entries[divs.index(t)][divs.index(d)]


@dataclass(frozen=True)
class OrderVector:
    """24-scaled orders of one quotient at the cusps 1/t of level M."""

    level: int
    orders24: Mapping[int, int]

    def to_json_dict(self) -> dict:
        return {
            "level": self.level,
            "orders24": {str(t): a for t, a in self.orders24.items()},
        }


@dataclass(frozen=True)
class NormalizedInverse:
    """Exact inverse of the order matrix plus its integral normalization.

    scale[t] is the least positive scalar making column t of the inverse
    integral; scaled holds those integral rescaled columns.
    """

    level: int
    divisors: tuple[int, ...]
    inv: tuple[tuple[Fraction, ...], ...]
    scale: Mapping[int, int]
    scaled: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def order_matrix(M: int) -> OrderMatrix:
    divs = divisors(M)
    entries = _blocks(M, _prime_power_block)
    mult = {t: phi(gcd(t, M // t)) for t in divs}
    return OrderMatrix(
        level=M,
        divisors=divs,
        entries=tuple(tuple(row) for row in entries),
        cusp_mult=mult,
        psi=psi(M),
    )


@lru_cache(maxsize=None)
def normalized_inverse(M: int) -> NormalizedInverse:
    divs = divisors(M)
    inv = _blocks(M, _prime_power_inverse)
    if M == 1:
        inv = [[Fraction(1)]]
    n = len(divs)
    scale = {}
    scaled = [[0] * n for _ in range(n)]
    for j, t in enumerate(divs):
        s = 1
        for i in range(n):
            s = lcm(s, inv[i][j].denominator)
        scale[t] = s
        for i in range(n):
            scaled[i][j] = int(inv[i][j] * s)
    return NormalizedInverse(
        level=M,
        divisors=divs,
        inv=tuple(tuple(row) for row in inv),
        scale=scale,
        scaled=tuple(tuple(row) for row in scaled),
    )


def order_vector(f: EtaQuotient, M: int | None = None) -> OrderVector:
    """24-scaled orders of f at the cusps of level M (default: the level of f)."""
    if M is None:
        M = f.level
    if M % f.level:
        raise ValueError(f"level {f.level} of the quotient does not divide {M}")
    om = order_matrix(M)
    x = [f.exponent(d) for d in om.divisors]
    a = {
        t: sum(row[j] * x[j] for j in range(len(x)) if x[j])
        for t, row in zip(om.divisors, om.entries)
    }
    return OrderVector(level=M, orders24=a)


def order_vector24_rational(exponents: Mapping[int, Fraction], M: int) -> dict[int, Fraction]:
    """Order vector for a rational-exponent map supported on divisors of M."""
    om = order_matrix(M)
    x = [exponents.get(d, Fraction(0)) for d in om.divisors]
    return {
        t: sum((row[j] * x[j] for j in range(len(x)) if x[j]), Fraction(0))
        for t, row in zip(om.divisors, om.entries)
    }


def is_holomorphic(f: EtaQuotient) -> bool:
    """True iff every cusp order of f on its own level is nonnegative."""
    return all(a >= 0 for a in order_vector(f).orders24.values())


def weight_from_orders(a: OrderVector) -> int:
    """Recover the doubled weight from the valence identity; errors if fractional."""
    om = order_matrix(a.level)
    total = sum(om.cusp_mult[t] * a.orders24[t] for t in om.divisors)
    k2, r = divmod(total, om.psi)
    if r:
        raise ValueError(
            f"orders sum to {total}, not a multiple of psi({a.level}) = {om.psi}"
        )
    return k2


def one_cusp_quotient(N: int, t: int) -> EtaQuotient:
    """The quotient whose exponents are column t of the scaled inverse.

    Its 24-scaled order vector is scale[t] at the single cusp 1/t and zero
    elsewhere, which makes these the canonical one-cusp factor candidates.
    """
    ninv = normalized_inverse(N)
    if t not in ninv.divisors:
        raise ValueError(f"{t} is not a divisor of {N}")
    j = ninv.divisors.index(t)
    return EtaQuotient({d: ninv.scaled[i][j] for i, d in enumerate(ninv.divisors)})
