"""Sparse exact multivariate polynomials and the shared text syntax.

Terms are kept in a dict mapping exponent tuples to nonzero field elements;
the zero polynomial is the empty dict.  Values are immutable by convention:
every operation returns a fresh polynomial.

Text syntax (used by the CLI task files and everywhere in tests): variables
are identifiers, ``^`` raises to a power, ``*`` between factors is optional,
coefficients are integers or ``a/b`` rationals, e.g. ``x^2*y - 3/2*z^3``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NotHomogeneousError, ParseError, RingMismatchError
from .ring import Ring, TermOrder, grevlex, monomial_div, monomial_divides, monomial_mul


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_terms(ring: Ring, items) -> "Polynomial":
        acc: dict = {}
        f = ring.field
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != ring.nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {ring}")
            cur = f.add(acc.get(exps, f.zero()), f.of(c))
            if cur:
                acc[exps] = cur
            else:
                acc.pop(exps, None)
        return Polynomial(ring, acc)

    @staticmethod
    def zero(ring: Ring) -> "Polynomial":
        return Polynomial(ring, {})

    @staticmethod
    def constant(ring: Ring, c) -> "Polynomial":
        c = ring.field.of(c)
        return Polynomial(ring, {ring.zero_exps(): c} if c else {})

    @staticmethod
    def variable(ring: Ring, i: int) -> "Polynomial":
        exps = [0] * ring.nvars
        exps[i] = 1
        return Polynomial(ring, {tuple(exps): ring.field.one()})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_exps() in self.terms)

    def total_degree(self) -> int:
        """Weighted total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ring.wdeg(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {self.ring.wdeg(e) for e in self.terms}
        return len(degs) == 1

    def homogeneous_degree(self) -> int:
        if not self.is_homogeneous():
            raise NotHomogeneousError(f"not homogeneous: {self}")
        return self.total_degree()

    def leading(self, order: TermOrder | None = None):
        """(exponents, coefficient) of the leading term under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = (order or grevlex()).sort_key(self.ring.weights)
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def sorted_terms(self, order: TermOrder | None = None):
        key = (order or grevlex()).sort_key(self.ring.weights)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def key(self) -> tuple:
        """Canonical hashable form (used for fingerprints and dedup)."""
        return tuple(sorted(self.terms.items()))

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.ring.field
        acc = dict(self.terms)
        for e, c in other.terms.items():
            cur = f.add(acc.get(e, f.zero()), c)
            if cur:
                acc[e] = cur
            else:
                acc.pop(e, None)
        return Polynomial(self.ring, acc)

    def __neg__(self) -> "Polynomial":
        f = self.ring.field
        return Polynomial(self.ring, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.ring.field
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = monomial_mul(e1, e2)
                cur = f.add(acc.get(e, f.zero()), f.mul(c1, c2))
                if cur:
                    acc[e] = cur
                else:
                    acc.pop(e, None)
        return Polynomial(self.ring, acc)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f.of(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, {e: f.mul(v, c) for e, v in self.terms.items()})

    def shift(self, exps: tuple[int, ...], c=None) -> "Polynomial":
        """Multiply by the monomial x^exps (optionally scaled by c)."""
        f = self.ring.field
        c = f.one() if c is None else f.of(c)
        return Polynomial(self.ring, {monomial_mul(e, exps): f.mul(v, c) for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    # -- normal forms ----------------------------------------------------

    def monic(self, order: TermOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading(order)
        f = self.ring.field
        return self.scale(f.inv(lc))

    def primitive(self, order: TermOrder | None = None) -> "Polynomial":
        """Over QQ: clear denominators, divide by the content, make the
        leading coefficient positive.  Over GF(p): monic."""
        if not self.terms:
            return self
        f = self.ring.field
        if not f.is_rationals:
            return self.monic(order)
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, c.numerator * den)
        _, lc = self.leading(order)
        sign = -1 if lc < 0 else 1
        return self.scale(Fraction(sign * den, num))

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Exact single-divisor division; raises ValueError on a remainder."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.ring.field
        key = grevlex().sort_key(self.ring.weights)
        dlt, dlc = divisor.leading()
        work = dict(self.terms)
        quot: dict = {}
        while work:
            m = max(work, key=key)
            c = work[m]
            if not monomial_divides(dlt, m):
                raise ValueError("inexact polynomial division")
            q = monomial_div(m, dlt)
            qc = f.div(c, dlc)
            quot[q] = qc
            for e, v in divisor.terms.items():
                e2 = monomial_mul(q, e)
                cur = f.sub(work.get(e2, f.zero()), f.mul(qc, v))
                if cur:
                    work[e2] = cur
                else:
                    work.pop(e2, None)
        return Polynomial(self.ring, quot)

    # -- printing --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        f = self.ring.field
        parts = []
        for exps, c in self.sorted_terms():
            factors = [
                f"{self.ring.names[i]}^{e}" if e > 1 else self.ring.names[i]
                for i, e in enumerate(exps)
                if e
            ]
            cs = f.repr_coeff(c)
            if factors:
                if cs == "1":
                    body = "*".join(factors)
                elif cs == "-1":
                    body = "-" + "*".join(factors)
                else:
                    body = cs + "*" + "*".join(factors)
            else:
                body = cs
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"<{self} in {self.ring}>"


def normalize(p: Polynomial, order: TermOrder | None = None, monic: bool = False) -> Polynomial:
    """Return ``p`` in canonical form, optionally with leading coefficient 1."""
    return p.monic(order) if monic else Polynomial(p.ring, dict(p.terms))


# ---------------------------------------------------------------------------
# text parsing


class _Tokens:
    def __init__(self, text: str):
        self.toks: list[tuple[str, str, int, int]] = []
        line, col = 1, 1
        i = 0
        while i < len(text):
            ch = text[i]
            if ch == "\n":
                line += 1
                col = 1
                i += 1
                continue
            if ch.isspace():
                col += 1
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.toks.append(("num", text[i:j], line, col))
                col += j - i
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(("ident", text[i:j], line, col))
                col += j - i
                i = j
                continue
            if ch in "+-*/^()":
                self.toks.append((ch, ch, line, col))
                col += 1
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", line, col)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else ("eof", "", 0, 0)

    def next(self):
        t = self.peek()
        self.pos += 1
        return t


def parse_polynomial(ring: Ring, text: str, base_line: int = 1) -> Polynomial:
    """Parse the shared polynomial syntax in the given ring."""
    toks = _Tokens(text)
    index = {n: i for i, n in enumerate(ring.names)}

    def err(msg, tok):
        raise ParseError(msg, tok[2] + base_line - 1, tok[3])

    def parse_atom() -> Polynomial:
        kind, val, *_ = tok = toks.peek()
        if kind == "num":
            toks.next()
            num = int(val)
            if toks.peek()[0] == "/":
                toks.next()
                dt = toks.next()
                if dt[0] != "num":
                    err("expected denominator after '/'", dt)
                return Polynomial.constant(ring, (num, int(dt[1])))
            return Polynomial.constant(ring, num)
        if kind == "ident":
            toks.next()
            if val not in index:
                err(f"unknown variable {val!r}", tok)
            return Polynomial.variable(ring, index[val])
        if kind == "(":
            toks.next()
            p = parse_expr()
            closing = toks.next()
            if closing[0] != ")":
                err("expected ')'", closing)
            return p
        err(f"unexpected token {val!r}", tok)

    def parse_factor() -> Polynomial:
        p = parse_atom()
        if toks.peek()[0] == "^":
            toks.next()
            et = toks.next()
            if et[0] != "num":
                err("expected integer exponent after '^'", et)
            p = p ** int(et[1])
        return p

    def parse_term() -> Polynomial:
        p = parse_factor()
        while True:
            kind = toks.peek()[0]
            if kind == "*":
                toks.next()
                p = p * parse_factor()
            elif kind in ("num", "ident", "("):
                p = p * parse_factor()
            else:
                return p

    def parse_expr() -> Polynomial:
        sign = 1
        while toks.peek()[0] in ("+", "-"):
            if toks.next()[0] == "-":
                sign = -sign
        p = parse_term().scale(sign)
        while toks.peek()[0] in ("+", "-"):
            sign = 1
            while toks.peek()[0] in ("+", "-"):
                if toks.next()[0] == "-":
                    sign = -sign
            p = p + parse_term().scale(sign)
        return p

    result = parse_expr()
    trailing = toks.peek()
    if trailing[0] != "eof":
        raise ParseError(f"unexpected trailing input {trailing[1]!r}", trailing[2] + base_line - 1, trailing[3])
    return result


def poly(ring: Ring, text: str) -> Polynomial:
    return parse_polynomial(ring, text)


def polys(ring: Ring, *texts: str) -> list[Polynomial]:
    return [parse_polynomial(ring, t) for t in texts]
