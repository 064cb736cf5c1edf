"""Rational functions over Laurent polynomials with a factored denominator."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from .laurent import ArityError, LaurentPoly

PRIME = (1 << 61) - 1


class SpecializationError(ZeroDivisionError):
    """A denominator vanishes at the requested parameter values."""


@lru_cache(maxsize=None)
def _point(m: int, salt: int = 0) -> tuple:
    rng = random.Random(7919 * (m + 1) + salt)
    return tuple(rng.randrange(2, PRIME - 1) for _ in range(m + 1))


@lru_cache(maxsize=4096)
def _power(f: LaurentPoly, k: int) -> LaurentPoly:
    return f ** k


def _expand(den: dict, m: int) -> LaurentPoly:
    out = LaurentPoly.constant(1, m)
    for f, k in den.items():
        out = out * _power(f, k)
    return out


def _polyrem_mod(a: dict, b: dict, p: int) -> bool:
    """True when b divides a in F_p[x, 1/x] (both given as {exp: coeff})."""
    if not a:
        return True
    lo = min(b)
    bb = {e - lo: c for e, c in b.items()}
    db = max(bb)
    if db == 0:
        return True
    lo = min(a)
    r = {e - lo: c for e, c in a.items()}
    inv = pow(bb[db], -1, p)
    while r:
        d = max(r)
        if d < db:
            return False
        c = r.pop(d) * inv % p
        s = d - db
        for e, cb in bb.items():
            if e == db:
                continue
            v = (r.get(e + s, 0) - c * cb) % p
            if v:
                r[e + s] = v
            else:
                r.pop(e + s, None)
        # strip low powers of x, they are units
        if r and min(r) > 0:
            lo = min(r)
            r = {e - lo: c for e, c in r.items()}
    return True


def _may_divide(num: LaurentPoly, f: LaurentPoly) -> bool:
    """Cheap one-sided test: False means f certainly does not divide num."""
    vars_ = f.variables()
    if not vars_:
        return True
    var = vars_[0]
    pt = _point(num.m, 1)
    fu = f.univariate_mod(var, pt, PRIME)
    if len(fu) < 2:
        return True
    nu = num.univariate_mod(var, pt, PRIME)
    return _polyrem_mod(nu, fu, PRIME)


def _cancel(num: LaurentPoly, den: dict):
    if not den:
        return num, den
    if not num:
        return num, {}
    out = {}
    for f, k in den.items():
        while k and _may_divide(num, f):
            quo = num.divexact(f)
            if quo is None:
                break
            num = quo
            k -= 1
        if k:
            out[f] = k
    return num, out


def _merge(a: dict, b: dict) -> dict:
    if not a:
        return dict(b)
    out = dict(a)
    for f, k in b.items():
        out[f] = out.get(f, 0) + k
    return out


class RatFn:
    """num / prod(f**k) with each f a normalized non-unit Laurent polynomial.

    Units (nonzero constants and monomials) always live in the numerator, so a
    value with an empty denominator is a Laurent polynomial. Equality is exact
    and uses cross-multiplication; there is no full gcd reduction.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: dict | None = None, cancel: bool = True):
        den = den or {}
        if cancel:
            num, den = _cancel(num, den)
        elif not num:
            den = {}
        self.num = num
        self.den = den

    @property
    def m(self) -> int:
        return self.num.m

    # construction
    @classmethod
    def const(cls, c, m: int) -> "RatFn":
        return cls(LaurentPoly.constant(Fraction(c), m), None, False)

    @classmethod
    def q(cls, m: int, power: int = 1) -> "RatFn":
        return cls(LaurentPoly.q(m, power), None, False)

    @classmethod
    def v(cls, k: int, m: int, power: int = 1) -> "RatFn":
        return cls(LaurentPoly.v(k, m, power), None, False)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RatFn":
        return cls(p, None, False)

    @classmethod
    def from_quotient(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFn":
        return cls.from_poly(num) / cls.from_poly(den)

    def denominator(self) -> LaurentPoly:
        return _expand(self.den, self.m)

    def numerator(self) -> LaurentPoly:
        return self.num

    # predicates
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return not self.den

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, RatFn):
            if other.m != self.m:
                raise ArityError(f"cannot combine rational functions with m={self.m} and m={other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return RatFn.const(other, self.m)
        if isinstance(other, LaurentPoly):
            return RatFn.from_poly(other)
        return NotImplemented

    def _common(self, other: "RatFn"):
        """Numerators rescaled to the least common factored denominator."""
        if self.den == other.den:
            return self.num, other.num, dict(self.den)
        lcm_den = dict(self.den)
        for f, k in other.den.items():
            if lcm_den.get(f, 0) < k:
                lcm_den[f] = k
        m = self.m
        a = self.num
        b = other.num
        ca = {f: k - self.den.get(f, 0) for f, k in lcm_den.items() if k > self.den.get(f, 0)}
        cb = {f: k - other.den.get(f, 0) for f, k in lcm_den.items() if k > other.den.get(f, 0)}
        if ca:
            a = a * _expand(ca, m)
        if cb:
            b = b * _expand(cb, m)
        return a, b, lcm_den

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, den = self._common(other)
        return RatFn(a + b, den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        a, b, den = self._common(other)
        return RatFn(a - b, den)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return RatFn(-self.num, self.den, False)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFn(self.num * other, self.den, False)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RatFn(LaurentPoly(self.m), None, False)
        return RatFn(self.num * other.num, _merge(self.den, other.den), bool(self.den or other.den))

    __rmul__ = __mul__

    def inverse(self) -> "RatFn":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        coeff, key, bound, prim = self.num.normalize()
        inv = Fraction(1) / Fraction(coeff)
        inv_unit = LaurentPoly(self.m, {-key: inv.numerator if inv.denominator == 1 else inv}, bound)
        num = _expand(self.den, self.m) * inv_unit
        den = {} if prim.is_constant() else {prim: 1}
        return RatFn(num, den, prim in self.den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = RatFn.const(1, self.m)
        for _ in range(e):
            out = out * self
        return out

    # comparison
    def value_mod(self, salt: int = 0):
        """Value at a fixed pseudo-random point modulo a large prime, or None."""
        pt = _point(self.m, salt)
        d = 1
        for f, k in self.den.items():
            d = d * pow(f.evaluate_mod(pt, PRIME), k, PRIME) % PRIME
        if d == 0:
            return None
        return self.num.evaluate_mod(pt, PRIME) * pow(d, -1, PRIME) % PRIME

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFn):
            return NotImplemented
        return ratfn_eq(self, other)

    def __hash__(self):
        v = self.value_mod()
        return hash(v)

    # transformations
    def omega(self) -> "RatFn":
        """Invert q and every vk."""
        num = self.num.omega()
        den = {}
        for f, k in self.den.items():
            coeff, key, bound, prim = f.omega().normalize()
            den[prim] = den.get(prim, 0) + k
            unit = LaurentPoly(self.m, {key: coeff}, bound) ** k
            num = num * (unit ** -1)
        return RatFn(num, den, False)

    def specialize(self, q, v: tuple) -> Fraction:
        """Exact value at (q, v); raises SpecializationError on a vanishing denominator."""
        d = Fraction(1)
        for f, k in self.den.items():
            fv = f.evaluate(q, v)
            if fv == 0:
                raise SpecializationError(f"denominator factor {f} vanishes at q={q}, v={tuple(v)}")
            d *= fv ** k
        return self.num.evaluate(q, v) / d

    def __repr__(self):
        from .text import render
        return f"RatFn({render(self)!r})"

    def __str__(self):
        from .text import render
        return render(self)


def ratfn_eq(a: RatFn, b: RatFn, precheck: bool = True) -> bool:
    """Exact equality by cross-multiplication.

    The optional modular evaluation can only short-circuit a False answer.
    """
    if a.m != b.m:
        raise ArityError(f"cannot compare rational functions with m={a.m} and m={b.m}")
    if a.den == b.den:
        return a.num == b.num
    if precheck:
        va, vb = a.value_mod(), b.value_mod()
        if va is not None and vb is not None and va != vb:
            return False
    x, y, _ = a._common(b)
    return x == y


def q_number(j: int, m: int = 0) -> RatFn:
    """(q^j - q^-j)/(q - q^-1) as a Laurent polynomial."""
    if j == 0:
        return RatFn.const(0, m)
    if j < 0:
        return -q_number(-j, m)
    terms = {(j - 1 - 2 * i,) + (0,) * m: 1 for i in range(j)}
    return RatFn.from_poly(LaurentPoly.from_dict(terms, m))
