"""Exact truncated q-expansions, the independent verification engine.

Every eta quotient expands on the q^(1/24) grid as an integer power series:
the leading grid exponent is the index-weighted exponent sum (which is also
the 24-scaled order at the cusp at infinity), and the tail is a product of
integer Euler-product powers.  Negative exponents go through exact series
inversion, so all coefficients stay integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .eta import EtaQuotient

__all__ = ["QSeries", "SeriesBudgetError", "qexp", "verify_identity"]

DEFAULT_SERIES_BUDGET = 200_000


class SeriesBudgetError(RuntimeError):
    def __init__(self, requested: int, budget: int):
        super().__init__(f"requested {requested} grid terms, budget is {budget}")
        self.requested = requested
        self.budget = budget


@dataclass(frozen=True)
class QSeries:
    """Integer series on the q^(1/24) grid.

    coeffs[i] is the coefficient of q^((offset24 + i) / 24); coeffs[0] is
    nonzero unless the whole window vanishes.
    """

    offset24: int
    coeffs: tuple[int, ...]

    def convolve(self, other: "QSeries") -> "QSeries":
        """Product series, truncated to the shorter window."""
        n = min(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if not a:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return _normalized(self.offset24 + other.offset24, out)


def _normalized(offset24: int, coeffs: list[int]) -> QSeries:
    shift = 0
    while shift < len(coeffs) and coeffs[shift] == 0:
        shift += 1
    if shift == len(coeffs):
        return QSeries(offset24=offset24, coeffs=(0,) * len(coeffs))
    return QSeries(offset24=offset24 + shift, coeffs=tuple(coeffs[shift:]))


@lru_cache(maxsize=32)
def _euler(n: int) -> tuple[int, ...]:
    # prod (1 - q^m) expanded by the pentagonal-number sparsity pattern
    c = [0] * (n + 1)
    c[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= n:
        sign = -1 if k % 2 else 1
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        c[g1] += sign
        if g2 <= n:
            c[g2] += sign
        k += 1
    return tuple(c)


def _mul(a: list[int], b, n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(min(len(b), n + 1 - i)):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _invert(a, n: int) -> list[int]:
    # a[0] == 1, so the inverse has integer coefficients
    out = [0] * (n + 1)
    out[0] = 1
    for m in range(1, n + 1):
        s = 0
        for j in range(1, min(m, len(a) - 1) + 1):
            if a[j]:
                s += a[j] * out[m - j]
        out[m] = -s
    return out


def _pow(base, e: int, n: int) -> list[int]:
    if e < 0:
        return _pow(_invert(base, n), -e, n)
    out = [0] * (n + 1)
    out[0] = 1
    sq = list(base[: n + 1]) + [0] * (n + 1 - len(base[: n + 1]))
    while e:
        if e & 1:
            out = _mul(out, sq, n)
        e >>= 1
        if e:
            sq = _mul(sq, sq, n)
    return out


def qexp(f: EtaQuotient, T: int, *, budget: int = DEFAULT_SERIES_BUDGET) -> QSeries:
    """Expansion of f through grid index T (i.e. up to q^((offset24+T)/24))."""
    if T < 0:
        raise ValueError(f"nonnegative term count required, got {T}")
    if T > budget:
        raise SeriesBudgetError(T, budget)
    nq = T // 24  # integer-q resolution of the tail
    prod = [1] + [0] * nq
    offset24 = 0
    for d, e in f.items():
        offset24 += d * e
        # (E(q^d))^e = (E^e)(q^d): compute at the coarse resolution, then dilate
        fine = _pow(_euler(nq // d), e, nq // d)
        dilated = [0] * (nq + 1)
        for j, c in enumerate(fine):
            dilated[j * d] = c
        prod = _mul(prod, dilated, nq)
    coeffs = [0] * (T + 1)
    for j, c in enumerate(prod):
        coeffs[24 * j] = c
    return _normalized(offset24, coeffs)


def verify_identity(
    lhs: EtaQuotient,
    rhs_factors: list[EtaQuotient],
    T: int,
    *,
    budget: int = DEFAULT_SERIES_BUDGET,
) -> bool:
    """Check lhs = prod(rhs_factors) by comparing expansions through grid index T."""
    left = qexp(lhs, T, budget=budget)
    right = qexp(EtaQuotient(), T, budget=budget)
    for g in rhs_factors:
        right = right.convolve(qexp(g, T, budget=budget))
    n = min(len(left.coeffs), len(right.coeffs))
    return left.offset24 == right.offset24 and left.coeffs[:n] == right.coeffs[:n]
