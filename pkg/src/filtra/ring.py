"""Polynomial ring descriptors and term orders.

Monomials are plain exponent tuples, one entry per ring variable; orders
produce sort keys so that bigger key means bigger monomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import RingMismatchError
from .field import CoeffField


@dataclass(frozen=True)
class TermOrder:
    """GrevLex, Lex, or a Block (elimination) order.

    A block order compares the first ``elim`` exponents by grevlex, then the
    rest by ``inner``; any monomial touching an eliminated variable therefore
    ranks above any monomial that does not.  ``weights`` overrides the ring's
    weight vector for degree comparisons.
    """

    kind: str  # "grevlex" | "lex" | "block"
    elim: int = 0
    inner: "TermOrder | None" = None
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown term order kind {self.kind!r}")
        if self.kind == "block" and (self.elim <= 0 or self.inner is None):
            raise ValueError("block order needs a positive prefix size and an inner order")
        if self.weights is not None and any(w <= 0 for w in self.weights):
            raise ValueError("order weights must be strictly positive")

    def cache_key(self) -> str:
        if self.kind == "block":
            return f"block({self.elim};{self.inner.cache_key()})"
        w = "" if self.weights is None else f"/{','.join(map(str, self.weights))}"
        return self.kind + w

    def sort_key(self, ring_weights: tuple[int, ...]):
        """Return ``key(exps)`` such that key order equals monomial order."""
        w = self.weights if self.weights is not None else ring_weights
        if self.kind == "lex":
            return lambda e: e
        if self.kind == "grevlex":
            if all(x == 1 for x in w):
                return lambda e: (sum(e), tuple(-x for x in reversed(e)))
            return lambda e: (sum(a * b for a, b in zip(e, w)), tuple(-x for x in reversed(e)))
        k = self.elim
        outer = grevlex(weights=w[:k] if self.weights is not None else None).sort_key(ring_weights[:k])
        inner = self.inner.sort_key(ring_weights[k:])
        return lambda e: (outer(e[:k]), inner(e[k:]))


def grevlex(weights: tuple[int, ...] | None = None) -> TermOrder:
    return TermOrder("grevlex", weights=weights)


def lex() -> TermOrder:
    return TermOrder("lex")


def block(elim: int, inner: TermOrder | None = None) -> TermOrder:
    return TermOrder("block", elim=elim, inner=inner or grevlex())


@dataclass(frozen=True)
class Ring:
    """Ambient polynomial ring: a field, named variables, positive weights."""

    field: CoeffField
    names: tuple[str, ...]
    weights: tuple[int, ...] = dc_field(default=())

    def __post_init__(self):
        if not self.names:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if not self.weights:
            object.__setattr__(self, "weights", (1,) * len(self.names))
        if len(self.weights) != len(self.names) or any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive, one per variable")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def wdeg(self, exps: tuple[int, ...]) -> int:
        if all(w == 1 for w in self.weights):
            return sum(exps)
        return sum(e * w for e, w in zip(exps, self.weights))

    def zero_exps(self) -> tuple[int, ...]:
        return (0,) * self.nvars

    def check_same(self, other: "Ring"):
        if self != other:
            raise RingMismatchError(f"ring mismatch: {self} vs {other}")

    def __str__(self) -> str:
        return f"{self.field}[{','.join(self.names)}]"


def ring(field: CoeffField, names, weights=None) -> Ring:
    if isinstance(names, str):
        names = tuple(n.strip() for n in names.split(","))
    return Ring(field, tuple(names), tuple(weights) if weights else ())


def monomial_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Exponent vector of x^a / x^b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))
