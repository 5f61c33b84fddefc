"""The eta quotient value type: a sparse map from rescaling index to exponent.

An eta quotient is determined by finitely many index/exponent pairs (d, e)
with d a positive integer and e a nonzero integer.  The level is the lcm
of the indices, the doubled weight is the exponent sum.  The constant 1 is
the empty map (level 1, doubled weight 0).

Text format: ``"1"`` for the constant, otherwise comma-separated ``d:e``
pairs, e.g. ``"1:1,2:1,3:-1,6:1"``.  Whitespace is ignored, duplicate
indices are summed, zero exponents are dropped.
"""

from __future__ import annotations

from math import gcd, lcm
from typing import Iterable, Iterator, Mapping

from .numth import divisors

__all__ = ["EtaParseError", "EtaQuotient", "ONE", "parse"]


class EtaParseError(ValueError):
    """Malformed eta-quotient text; ``position`` is the offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EtaQuotient:
    """Immutable eta quotient with integer exponents."""

    __slots__ = ("_exps",)

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[int, int] = {}
        for d, e in items:
            if not isinstance(d, int) or not isinstance(e, int):
                raise TypeError("indices and exponents must be integers")
            if d < 1:
                raise ValueError(f"rescaling index must be positive, got {d}")
            acc[d] = acc.get(d, 0) + e
        object.__setattr__(
            self, "_exps", tuple(sorted((d, e) for d, e in acc.items() if e != 0))
        )

    def __setattr__(self, name, value):
        raise AttributeError("EtaQuotient is immutable")

    # -- structure ---------------------------------------------------------

    @property
    def level(self) -> int:
        n = 1
        for d, _ in self._exps:
            n = lcm(n, d)
        return n

    @property
    def weight2(self) -> int:
        """Doubled weight: the exponent sum."""
        return sum(e for _, e in self._exps)

    @property
    def is_one(self) -> bool:
        return not self._exps

    def exponent(self, d: int) -> int:
        for dd, e in self._exps:
            if dd == d:
                return e
        return 0

    def exponents(self) -> dict[int, int]:
        return dict(self._exps)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._exps)

    def support(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self._exps)

    # -- algebra -----------------------------------------------------------

    def combine(self, other: "EtaQuotient", sign: int = 1) -> "EtaQuotient":
        """Exponent-wise sum (sign=+1, the product) or difference (sign=-1)."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        acc = dict(self._exps)
        for d, e in other._exps:
            acc[d] = acc.get(d, 0) + sign * e
        return EtaQuotient(acc)

    def __mul__(self, other: "EtaQuotient") -> "EtaQuotient":
        return self.combine(other, 1)

    def __truediv__(self, other: "EtaQuotient") -> "EtaQuotient":
        return self.combine(other, -1)

    def __pow__(self, n: int) -> "EtaQuotient":
        return EtaQuotient({d: e * n for d, e in self._exps})

    def rescale(self, v: int) -> "EtaQuotient":
        """Index map d -> v*d (the substitution z -> v*z)."""
        if v < 1:
            raise ValueError(f"rescaling factor must be positive, got {v}")
        return EtaQuotient({d * v: e for d, e in self._exps})

    def extract(self) -> tuple["EtaQuotient", int]:
        """The primitive quotient f0 and v with self = rescale(f0, v).

        v is the gcd of the support; the constant has no extract.
        """
        if self.is_one:
            raise ValueError("the constant quotient has no extract")
        v = 0
        for d, _ in self._exps:
            v = gcd(v, d)
        return EtaQuotient({d // v: e for d, e in self._exps}), v

    # -- text --------------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "EtaQuotient":
        if text.strip() in ("", "1"):
            return cls()
        pairs = []
        offset = 0
        for chunk in text.split(","):
            stripped = chunk.strip()
            pos = offset + chunk.index(stripped) if stripped else offset
            head, sep, tail = stripped.partition(":")
            if not sep:
                raise EtaParseError(f"expected 'd:e' pair, got {stripped!r}", pos)
            try:
                d = int(head)
                e = int(tail)
            except ValueError:
                raise EtaParseError(f"expected 'd:e' pair, got {stripped!r}", pos) from None
            if d < 1:
                raise EtaParseError(f"rescaling index must be positive, got {d}", pos)
            pairs.append((d, e))
            offset += len(chunk) + 1
        return cls(pairs)

    def format(self) -> str:
        """Canonical text; keys follow the canonical divisor order of the level."""
        if self.is_one:
            return "1"
        exps = dict(self._exps)
        return ",".join(f"{d}:{exps[d]}" for d in divisors(self.level) if d in exps)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"EtaQuotient({self.format()!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, EtaQuotient) and self._exps == other._exps

    def __hash__(self) -> int:
        return hash(self._exps)


ONE = EtaQuotient()


def parse(text: str) -> EtaQuotient:
    return EtaQuotient.parse(text)
