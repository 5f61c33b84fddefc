"""Factorizability and irreducibility decisions.

A factorization of a holomorphic f on level M is a lattice point: writing a
for the 24-scaled order vector of f, the order vectors b of factors of f on
level M are exactly the integer points of the box 0 <= b <= a whose
preimage under the order matrix is an integral exponent vector.  The search
runs depth-first over the box in the canonical divisor order; because the
inverse order matrix is tridiagonal per prime, each coordinate of the
exponent vector is fully determined after a short prefix of the box
coordinates, so integrality can be checked and pruned early.

The verdict engine layers the exact criteria (prime-power levels, doubled
weight <= 2, projections to exact divisors) in front of a bounded search
over levels with the same prime support.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .bounds import min_level_bound
from .eta import EtaQuotient
from .numth import exact_divisors, is_prime_power, phihat, rad
from .orders import (
    is_holomorphic,
    normalized_inverse,
    one_cusp_quotient,
    order_matrix,
    order_vector,
)
from .transforms import lower

__all__ = [
    "DEFAULT_ENUM_BUDGET",
    "EnumerationBudgetError",
    "FactorizationWitness",
    "IrreducibilityVerdict",
    "IRREDUCIBLE",
    "REDUCIBLE",
    "UNKNOWN",
    "all_factors_on",
    "decide_irreducible",
    "factorize_on",
    "is_factor",
    "min_factorization_level",
    "quasi_irreducible",
    "structured_factor_search",
]

DEFAULT_ENUM_BUDGET = 10**8

REDUCIBLE = "reducible"
IRREDUCIBLE = "irreducible"
UNKNOWN = "unknown-up-to"

METHOD_PRIME_POWER = "prime-power"
METHOD_WEIGHT_ONE = "weight-one"
METHOD_LOWER_PROJECTION = "lower-projection"
METHOD_BOUND_EXHAUSTED = "bound-exhausted"


class EnumerationBudgetError(RuntimeError):
    """The box search gave up: distinct from a completed search with no hit."""

    def __init__(self, budget: int):
        super().__init__(f"enumeration budget of {budget} node visits exhausted")
        self.budget = budget


@dataclass(frozen=True)
class FactorizationWitness:
    g: EtaQuotient
    h: EtaQuotient
    on_level: int


@dataclass(frozen=True)
class IrreducibilityVerdict:
    kind: str  # REDUCIBLE | IRREDUCIBLE | UNKNOWN
    witness: FactorizationWitness | None = None
    method: str | None = None
    cap: int | None = None


def is_factor(g: EtaQuotient, f: EtaQuotient) -> bool:
    """True iff g, f and f/g are all holomorphic (checked on the joint level)."""
    if not (is_holomorphic(g) and is_holomorphic(f)):
        return False
    M = lcm(f.level, g.level)
    return all(a >= 0 for a in order_vector(f / g, M).orders24.values())


def _require_search_input(f: EtaQuotient, M: int) -> None:
    if M % f.level:
        raise ValueError(f"level {f.level} of the quotient does not divide {M}")
    if not is_holomorphic(f):
        raise ValueError("search requires a holomorphic quotient")


def _iter_splits(M: int, a: list[int], wmin: int, wmax: int, budget: int):
    """Yield (b, Y): order vectors b in the box [0, a] with integral exponents Y.

    b runs in lexicographic order over divisors(M) canonical coordinates.
    Only points with wmin <= sum(mult * b) <= wmax survive.  Every node
    visit counts against the budget.
    """
    om = order_matrix(M)
    ninv = normalized_inverse(M)
    divs = om.divisors
    n = len(divs)
    D = phihat(M)
    # the inverse order matrix cleared of denominators; row i of Y is final
    # once its last nonzero column has been assigned
    C = [[int(ninv.inv[i][j] * D) for j in range(n)] for i in range(n)]
    cols = [[(i, C[i][j]) for i in range(n) if C[i][j]] for j in range(n)]
    complete_at = [[] for _ in range(n)]
    for i in range(n):
        complete_at[max(j for j in range(n) if C[i][j])].append(i)
    mult = [om.cusp_mult[t] for t in divs]
    suffix = [0] * (n + 1)
    for j in reversed(range(n)):
        suffix[j] = suffix[j + 1] + mult[j] * a[j]
    if wmin > suffix[0]:
        return
    b = [0] * n
    visited = 0

    def rec(j: int, w: int, S: list[int]):
        nonlocal visited
        if j == n:
            if w >= wmin:
                yield tuple(b), tuple(s // D for s in S)
            return
        S2 = list(S)
        for bj in range(a[j] + 1):
            visited += 1
            if visited > budget:
                raise EnumerationBudgetError(budget)
            if bj:
                for i, c in cols[j]:
                    S2[i] += c
            w2 = w + mult[j] * bj
            if w2 > wmax:
                break
            if w2 + suffix[j + 1] < wmin:
                continue
            if all(S2[i] % D == 0 for i in complete_at[j]):
                b[j] = bj
                yield from rec(j + 1, w2, S2)
        b[j] = 0

    yield from rec(0, 0, [0] * n)


def all_factors_on(
    f: EtaQuotient, M: int, *, budget: int = DEFAULT_ENUM_BUDGET
) -> list[EtaQuotient]:
    """Every holomorphic g on level M with f/g holomorphic, including 1 and f.

    Ordered by the order vectors of the factors, lexicographically in the
    canonical divisor coordinates.
    """
    _require_search_input(f, M)
    om = order_matrix(M)
    a = [order_vector(f, M).orders24[t] for t in om.divisors]
    out = []
    for _, Y in _iter_splits(M, a, 0, f.weight2 * om.psi, budget):
        out.append(EtaQuotient(dict(zip(om.divisors, Y))))
    return out


def _witness_from_pair(f, M, gY, hY, divs) -> FactorizationWitness:
    g = EtaQuotient(dict(zip(divs, gY)))
    h = EtaQuotient(dict(zip(divs, hY)))
    return FactorizationWitness(g=g, h=h, on_level=M)


def factorize_on(
    f: EtaQuotient, M: int, *, budget: int = DEFAULT_ENUM_BUDGET
) -> FactorizationWitness | None:
    """Find nonconstant holomorphic g, h on level M with g * h = f.

    Complete over level M: None means no such factorization exists.  The
    returned witness is canonical: among all factor pairs, the one whose
    exponent vectors are closest in L1 distance, preferring distinct pairs
    over a repeated square root, with ties broken by the lexicographically
    least lighter factor; the pair is ordered lighter factor first.
    """
    _require_search_input(f, M)
    om = order_matrix(M)
    psi_m = om.psi
    k2 = f.weight2
    if k2 < 2:
        return None
    divs = om.divisors
    a = [order_vector(f, M).orders24[t] for t in divs]
    X = tuple(f.exponent(d) for d in divs)
    best_key = None
    best = None
    for _, Y in _iter_splits(M, a, psi_m, (k2 - 1) * psi_m, budget):
        Z = tuple(x - y for x, y in zip(X, Y))
        gk = (sum(Y), Y)
        hk = (sum(Z), Z)
        lighter, heavier = (gk, hk) if gk <= hk else (hk, gk)
        gap = sum(abs(y - z) for y, z in zip(Y, Z))
        key = (Y == Z, gap, lighter)
        if best_key is None or key < best_key:
            best_key = key
            best = (lighter[1], heavier[1])
    if best is None:
        return None
    return _witness_from_pair(f, M, best[0], best[1], divs)


def _has_split(f: EtaQuotient, M: int, budget: int) -> bool:
    om = order_matrix(M)
    k2 = f.weight2
    if k2 < 2:
        return False
    a = [order_vector(f, M).orders24[t] for t in om.divisors]
    for _ in _iter_splits(M, a, om.psi, (k2 - 1) * om.psi, budget):
        return True
    return False


def quasi_irreducible(f: EtaQuotient, *, budget: int = DEFAULT_ENUM_BUDGET) -> bool:
    """True iff f has no nonconstant factorization on its own level."""
    if f.is_one:
        raise ValueError("the constant quotient is not classified")
    _require_search_input(f, f.level)
    return not _has_split(f, f.level, budget)


def _rad_preserving_multiples(N: int, cap: int):
    r = rad(N)
    for M in range(N, cap + 1, N):
        if rad(M) == r:
            yield M


def min_factorization_level(
    f: EtaQuotient, cap: int, *, budget: int = DEFAULT_ENUM_BUDGET
) -> int | None:
    """Least M <= cap with the same prime support as the level on which f splits.

    Restricting to levels with rad(M) = rad(level) loses nothing: any
    factorization projects to one on the same-support part of its level.
    """
    if f.is_one:
        raise ValueError("the constant quotient is not searched")
    _require_search_input(f, f.level)
    if cap < f.level:
        raise ValueError(f"cap {cap} is below the level {f.level}")
    for M in _rad_preserving_multiples(f.level, cap):
        if _has_split(f, M, budget):
            return M
    return None


def _exact_irreducible(f: EtaQuotient, budget: int) -> bool | None:
    """Decide irreducibility by the exact criteria only; None if they don't apply."""
    k2 = f.weight2
    if k2 == 1:
        return True
    N = f.level
    if N == 1 or is_prime_power(N):
        return not _has_split(f, N, budget)
    if k2 == 2:
        return not _has_split(f, lcm(N, 12), budget)
    return None


def decide_irreducible(
    f: EtaQuotient, cap: int | None = None, *, budget: int = DEFAULT_ENUM_BUDGET
) -> IrreducibilityVerdict:
    """Three-valued irreducibility decision.

    Cascade: prime-power levels and doubled weights <= 2 are decidable by a
    single bounded search (doubled weight 1 needs none at all); a
    projection to an exact divisor that is irreducible by those criteria
    settles the composite case; otherwise search levels with the same prime
    support up to cap, which is conclusive only past the explicit bound.
    """
    if f.is_one:
        raise ValueError("the constant quotient is not classified")
    _require_search_input(f, f.level)
    N = f.level
    k2 = f.weight2
    if cap is None:
        cap = 4 * N

    if N == 1 or is_prime_power(N):
        w = factorize_on(f, N, budget=budget)
        if w is not None:
            return IrreducibilityVerdict(kind=REDUCIBLE, witness=w)
        return IrreducibilityVerdict(kind=IRREDUCIBLE, method=METHOD_PRIME_POWER)

    if k2 == 1:
        # a nonconstant holomorphic factor pair would need two positive
        # weights summing to 1/2
        return IrreducibilityVerdict(kind=IRREDUCIBLE, method=METHOD_WEIGHT_ONE)

    if k2 == 2:
        # the level of any factor divides lcm(N, 12); try the smaller level
        # first so reducible inputs get the nicest witness
        if _has_split(f, N, budget):
            return IrreducibilityVerdict(kind=REDUCIBLE, witness=factorize_on(f, N, budget=budget))
        M = lcm(N, 12)
        w = factorize_on(f, M, budget=budget)
        if w is not None:
            return IrreducibilityVerdict(kind=REDUCIBLE, witness=w)
        return IrreducibilityVerdict(kind=IRREDUCIBLE, method=METHOD_WEIGHT_ONE)

    for n1 in exact_divisors(N):
        if n1 == N:
            continue
        low = lower(f, N, n1)
        if not low.integral or low.is_one:
            continue
        if _exact_irreducible(low.to_eta(), budget):
            return IrreducibilityVerdict(kind=IRREDUCIBLE, method=METHOD_LOWER_PROJECTION)

    for M in _rad_preserving_multiples(N, cap):
        if _has_split(f, M, budget):
            return IrreducibilityVerdict(
                kind=REDUCIBLE, witness=factorize_on(f, M, budget=budget)
            )
    bound = min_level_bound(N, k2).bound
    if bound is not None and cap >= bound:
        return IrreducibilityVerdict(kind=IRREDUCIBLE, method=METHOD_BOUND_EXHAUSTED)
    return IrreducibilityVerdict(kind=UNKNOWN, cap=cap)


def structured_factor_search(f: EtaQuotient) -> list[EtaQuotient]:
    """The one-cusp candidates at the level of f that are factors of f.

    A cheap pre-screen before full enumeration; each candidate concentrates
    its whole order at a single cusp, so domination of the order vector of
    f is immediate to check.
    """
    if f.is_one:
        raise ValueError("the constant quotient is not searched")
    if not is_holomorphic(f):
        raise ValueError("search requires a holomorphic quotient")
    N = f.level
    ninv = normalized_inverse(N)
    a = order_vector(f, N).orders24
    out = []
    for t in ninv.divisors:
        if ninv.scale[t] <= a[t]:
            cand = one_cusp_quotient(N, t)
            if is_factor(cand, f):
                out.append(cand)
    return out
