"""Sparse Laurent polynomials in q, v1, ..., vm with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from .. import _kernels as K

MAX_EXP = K.HALF - 1


class ArityError(ValueError):
    """Operands belong to rings with different numbers of v-variables."""


def pack(exps: Iterable[int]) -> int:
    key = 0
    for e in exps:
        if abs(e) > MAX_EXP:
            raise OverflowError(f"exponent {e} exceeds the supported range +-{MAX_EXP}")
        key = key * K.FIELD + e
    return key


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Immutable sparse Laurent polynomial.

    ``m`` is the number of v-variables; exponent vectors have length m+1 with
    the q exponent first. Terms are stored in a dict keyed by packed exponent
    vectors, so there are never zero coefficients.
    """

    __slots__ = ("m", "_t", "_bound", "_hash")

    def __init__(self, m: int, terms: dict | None = None, bound: int | None = None):
        self.m = m
        self._t = terms if terms is not None else {}
        if bound is None:
            bound = 0
            n = m + 1
            for k in self._t:
                for e in K.unpack(k, n):
                    if abs(e) > bound:
                        bound = abs(e)
        if bound > MAX_EXP:
            raise OverflowError(f"exponent bound {bound} exceeds +-{MAX_EXP}")
        self._bound = bound
        self._hash = None

    # construction
    @classmethod
    def from_dict(cls, terms: Mapping[tuple, object], m: int) -> "LaurentPoly":
        out: dict = {}
        for exps, c in terms.items():
            if len(exps) != m + 1:
                raise ArityError(f"exponent vector {exps} does not have length {m + 1}")
            c = _clean(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
            if not c:
                continue
            k = pack(exps)
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return cls(m, out)

    @classmethod
    def constant(cls, c, m: int) -> "LaurentPoly":
        c = _clean(c)
        return cls(m, {0: c} if c else {}, 0)

    @classmethod
    def monomial(cls, exps: Iterable[int], m: int, coeff=1) -> "LaurentPoly":
        exps = tuple(exps)
        if len(exps) != m + 1:
            raise ArityError(f"exponent vector {exps} does not have length {m + 1}")
        return cls(m, {pack(exps): _clean(coeff)} if coeff else {}, max(map(abs, exps)))

    @classmethod
    def q(cls, m: int, power: int = 1) -> "LaurentPoly":
        return cls.monomial((power,) + (0,) * m, m)

    @classmethod
    def v(cls, k: int, m: int, power: int = 1) -> "LaurentPoly":
        if not 1 <= k <= m:
            raise ArityError(f"v{k} is not a variable when m = {m}")
        e = [0] * (m + 1)
        e[k] = power
        return cls.monomial(e, m)

    # inspection
    def terms(self) -> dict:
        """Exponent tuple -> coefficient, in descending exponent order."""
        n = self.m + 1
        return {K.unpack(k, n): c for k, c in sorted(self._t.items(), reverse=True)}

    def raw(self) -> dict:
        return self._t

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def constant_value(self):
        if not self._t:
            return 0
        if not self.is_constant():
            raise ValueError("not a constant")
        return self._t[0]

    def leading(self):
        k = max(self._t)
        return K.unpack(k, self.m + 1), self._t[k]

    def sort_key(self):
        return tuple(sorted(self._t.items(), reverse=True))

    def variables(self) -> list[int]:
        """Indices (0 = q, k = vk) of the variables that occur."""
        n = self.m + 1
        seen = [False] * n
        for k in self._t:
            for i, e in enumerate(K.unpack(k, n)):
                if e:
                    seen[i] = True
        return [i for i in range(n) if seen[i]]

    # arithmetic
    def _check(self, other: "LaurentPoly"):
        if self.m != other.m:
            raise ArityError(f"cannot combine polynomials with m={self.m} and m={other.m}")

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other, self.m)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self.m, K.add(self._t, other._t), max(self._bound, other._bound))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self.m, K.sub(self._t, other._t), max(self._bound, other._bound))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return LaurentPoly(self.m, {k: -c for k, c in self._t.items()}, self._bound)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.m, K.scale(self._t, _clean(other)), self._bound)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        return LaurentPoly(self.m, K.mul(self._t, other._t), self._bound + other._bound)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (k, c), = self._t.items()
            return LaurentPoly(self.m, {-k * (-e): _clean(Fraction(1) / c ** (-e))}, self._bound * (-e))
        out = LaurentPoly.constant(1, self.m)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def shift(self, key: int, bound: int) -> "LaurentPoly":
        """Multiply by the monomial with packed exponent ``key``."""
        return LaurentPoly(self.m, K.scale(self._t, 1, key), self._bound + bound)

    def divexact(self, other: "LaurentPoly"):
        """Exact quotient, or None when ``other`` does not divide ``self``."""
        self._check(other)
        r = K.divexact(self._t, other._t, self.m + 1)
        if r is None:
            return None
        return LaurentPoly(self.m, r)

    def omega(self) -> "LaurentPoly":
        """Invert every variable."""
        return LaurentPoly(self.m, {-k: c for k, c in self._t.items()}, self._bound)

    # comparison
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.m)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.m == other.m and self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, frozenset(self._t.items())))
        return self._hash

    # evaluation
    def evaluate(self, q, v: tuple):
        """Exact value at q and v = (v1, ..., vm)."""
        vals = (q,) + tuple(v)
        if len(vals) != self.m + 1:
            raise ArityError(f"expected {self.m} v-values, got {len(v)}")
        n = self.m + 1
        total = Fraction(0)
        cache: dict = {}
        for k, c in self._t.items():
            term = Fraction(c)
            for i, e in enumerate(K.unpack(k, n)):
                if e:
                    p = cache.get((i, e))
                    if p is None:
                        p = Fraction(vals[i]) ** e
                        cache[(i, e)] = p
                    term *= p
            total += term
        return total

    def evaluate_mod(self, point: tuple, prime: int) -> int:
        n = self.m + 1
        total = 0
        for k, c in self._t.items():
            if isinstance(c, Fraction):
                term = c.numerator * pow(c.denominator, -1, prime)
            else:
                term = c
            for i, e in enumerate(K.unpack(k, n)):
                if e:
                    term = term * pow(point[i], e, prime)
            total = (total + term) % prime
        return total

    def univariate_mod(self, var: int, point: tuple, prime: int) -> dict:
        """Substitute ``point`` for every variable except ``var``; return {exp: coeff mod p}."""
        n = self.m + 1
        out: dict = {}
        for k, c in self._t.items():
            if isinstance(c, Fraction):
                term = c.numerator * pow(c.denominator, -1, prime)
            else:
                term = c
            exps = K.unpack(k, n)
            for i, e in enumerate(exps):
                if e and i != var:
                    term = term * pow(point[i], e, prime)
            d = exps[var]
            out[d] = (out.get(d, 0) + term) % prime
        return {d: c for d, c in out.items() if c}

    def normalize(self):
        """Split off the unit part: self == coeff * x^key * primitive.

        ``primitive`` has integer coefficients with gcd 1, positive leading
        coefficient and every variable's minimum exponent equal to zero.
        Returns (coeff, key, bound, primitive).
        """
        if not self._t:
            raise ZeroDivisionError("the zero polynomial has no normal form")
        n = self.m + 1
        mins = None
        for k in self._t:
            e = K.unpack(k, n)
            mins = list(e) if mins is None else [min(a, b) for a, b in zip(mins, e)]
        skey = pack(mins)
        den = 1
        for c in self._t.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        ints = {k - skey: int(c * den) for k, c in self._t.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
        if ints[max(ints)] < 0:
            g = -g
        prim = {k: c // g for k, c in ints.items()}
        coeff = _clean(Fraction(g, den))
        return coeff, skey, max(map(abs, mins)), LaurentPoly(self.m, prim)

    def __repr__(self):
        from .text import render_poly
        return f"LaurentPoly({render_poly(self)!r}, m={self.m})"

    def __str__(self):
        from .text import render_poly
        return render_poly(self)
