"""Explicit bounds used by the irreducibility decision engine.

The headline bound for the least level on which a reducible quotient of
level N and doubled weight k factorizes is

    (2*N*k) ** 2**(ceil(R) - 1) * doubling_product(ceil(R)),

with R = exponent_norm_bound(k - 1, N), together with the constraint that
the minimizing level has the same prime support as N.  R is rational in
general while the tail product wants an integer argument >= 2, so the
closed form is evaluated at ceil(R); both factors are nondecreasing there,
so this only weakens the bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .eta import EtaQuotient
from .numth import factorization, phi, rad

__all__ = [
    "BoundReport",
    "PrimitiveLevelUnknown",
    "PRIMITIVE_LEVEL_BOUNDS",
    "factor_level_bound",
    "quasi_weight_bound",
    "primitive_level_bound",
    "exponent_norm_bound",
    "min_level_bound",
    "doubling_product",
]

# Largest exact bound kept as an integer; beyond this only log2_bound is filled.
_MAX_EXACT_BITS = 10**6

# Known least common-multiple levels for primitive irreducible quotients of
# doubled weight <= k.  Only k = 1 is known; extend here if that changes.
PRIMITIVE_LEVEL_BOUNDS: dict[int, int] = {1: 12}


class PrimitiveLevelUnknown(LookupError):
    def __init__(self, k: int):
        super().__init__(f"the level table has no entry for doubled weight {k}")
        self.k = k


def primitive_level_bound(k: int) -> int:
    if k < 1:
        raise ValueError(f"doubled weight must be >= 1, got {k}")
    try:
        return PRIMITIVE_LEVEL_BOUNDS[k]
    except KeyError:
        raise PrimitiveLevelUnknown(k) from None


def exponent_norm_bound(k: int, N: int) -> Fraction:
    """k * prod over p^m || N of ((p+1)/(p-1)) ** min(2, m).

    Bounds the L1 norm of the exponent vector of any holomorphic quotient
    of doubled weight k on level N.
    """
    if k < 0:
        raise ValueError(f"nonnegative k required, got {k}")
    out = Fraction(k)
    for p, m in factorization(N):
        out *= Fraction(p + 1, p - 1) ** min(2, m)
    return out


def doubling_product(x: Fraction | int) -> int:
    """1 for x < 2; prod over 1 <= j <= x-1 of (x - j) ** 2**(j-1) otherwise.

    Defined here only for integral x >= 2; callers route rational arguments
    through ceil first.
    """
    x = Fraction(x)
    if x < 2:
        return 1
    if x.denominator != 1:
        raise ValueError(f"doubling_product wants an integer argument >= 2, got {x}")
    n = int(x)
    out = 1
    for j in range(1, n):
        out *= (n - j) ** (2 ** (j - 1))
    return out


def quasi_weight_bound(N: int) -> int:
    """phi(rad(N)) * prod over p^m || N of ((m-1)(p-1) + 2).

    Upper bound for the doubled weights of the quotients of level N that do
    not factorize on their own level.
    """
    out = phi(rad(N))
    for p, m in factorization(N):
        out *= (m - 1) * (p - 1) + 2
    return out


def factor_level_bound(f: EtaQuotient) -> int:
    """lcm of the level of f with the doubled-weight-(k-1) table level.

    Every factor of f has level dividing this.  Only available for doubled
    weight 2 at present; larger weights raise PrimitiveLevelUnknown.
    """
    k2 = f.weight2
    if k2 < 2:
        raise ValueError(f"doubled weight must be >= 2, got {k2}")
    return lcm(f.level, primitive_level_bound(k2 - 1))


@dataclass(frozen=True)
class BoundReport:
    """Exact evaluation of the least-factorization-level bound.

    bound = base ** 2**pow2_log2 * doubling_product, kept as an exact integer while
    it fits in _MAX_EXACT_BITS bits; log2_bound is always filled.  The
    minimizing level additionally has the same prime radical as N.
    """

    N: int
    k: int
    R: Fraction
    doubling_product: int | None
    bound: int | None
    log2_bound: float
    base: int
    pow2_log2: int

    def to_json_dict(self) -> dict:
        return {
            "N": self.N,
            "k": self.k,
            "R": str(self.R),
            "doubling_product": self.doubling_product,
            "bound": self.bound,
            "log2_bound": self.log2_bound,
            "base": self.base,
            "pow2_log2": self.pow2_log2,
        }


def _log2_int(n: int) -> float:
    if n.bit_length() <= 900:
        return math.log2(n)
    shift = n.bit_length() - 64
    return shift + math.log2(n >> shift)


def _log2_doubling_product(x: int) -> float:
    if x < 2:
        return 0.0
    try:
        return sum(2.0 ** (j - 1) * math.log2(x - j) for j in range(1, x))
    except OverflowError:
        return math.inf


def min_level_bound(N: int, k: int | None = None, *, weight_free: bool = False) -> BoundReport:
    """Bound on the least level where a reducible quotient factorizes.

    Weight-aware mode takes the doubled weight k >= 2; weight-free mode
    substitutes k = quasi_weight_bound(N), bounding over all weights at once.
    """
    if N < 1:
        raise ValueError(f"positive level required, got {N}")
    if weight_free:
        if k is not None:
            raise ValueError("weight-free mode computes k itself")
        k = quasi_weight_bound(N)
    if k is None or k < 2:
        raise ValueError(f"doubled weight >= 2 required, got {k}")
    R = exponent_norm_bound(k - 1, N)
    ceil_r = math.ceil(R)
    base = 2 * N * k
    pow2_log2 = max(ceil_r - 1, 0)
    # size estimate in bits before committing to exact arithmetic
    try:
        est_bits = 2.0**pow2_log2 * math.log2(base) + _log2_doubling_product(ceil_r)
    except OverflowError:
        est_bits = math.inf
    if est_bits <= _MAX_EXACT_BITS:
        ups = doubling_product(ceil_r)
        bound = base ** (2**pow2_log2) * ups
        return BoundReport(
            N=N,
            k=k,
            R=R,
            doubling_product=ups,
            bound=bound,
            log2_bound=_log2_int(bound),
            base=base,
            pow2_log2=pow2_log2,
        )
    return BoundReport(
        N=N,
        k=k,
        R=R,
        doubling_product=None,
        bound=None,
        log2_bound=est_bits,
        base=base,
        pow2_log2=pow2_log2,
    )
