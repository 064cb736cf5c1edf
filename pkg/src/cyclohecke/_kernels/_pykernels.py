"""Pure-Python sparse polynomial kernels.

A polynomial is a dict mapping a packed exponent key to a nonzero coefficient.
Keys pack the exponent vector (q, v1, ..., vm) in base ``FIELD`` with q in the
most significant slot, so multiplying monomials is adding keys and ordering keys
numerically is the lexicographic order on exponent vectors.
"""

from fractions import Fraction

FIELD = 4096
HALF = FIELD // 2


def mul(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = ka + kb
            c = get(k, 0) + ca * cb
            if c:
                out[k] = c
            else:
                out.pop(k, None)
    return out


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def sub(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def scale(a, c, shift=0):
    if not c:
        return {}
    return {k + shift: v * c for k, v in a.items()}


def unpack(key, nfields):
    out = [0] * nfields
    for i in range(nfields - 1, -1, -1):
        e = (key + HALF) % FIELD - HALF
        out[i] = e
        key = (key - e) // FIELD
    return tuple(out)


def _box(a, nfields):
    lo = [None] * nfields
    hi = [None] * nfields
    for k in a:
        e = unpack(k, nfields)
        for i in range(nfields):
            if lo[i] is None or e[i] < lo[i]:
                lo[i] = e[i]
            if hi[i] is None or e[i] > hi[i]:
                hi[i] = e[i]
    return lo, hi


def divexact(a, b, nfields):
    """Return a / b if b divides a exactly (as Laurent polynomials), else None."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    alo, ahi = _box(a, nfields)
    blo, bhi = _box(b, nfields)
    lo = [x - y for x, y in zip(alo, blo)]
    hi = [x - y for x, y in zip(ahi, bhi)]
    if any(l > h for l, h in zip(lo, hi)):
        return None
    lead = max(b)
    lc = b[lead]
    bitems = list(b.items())
    r = dict(a)
    quo = {}
    while r:
        k = max(r)
        t = k - lead
        e = unpack(t, nfields)
        for i in range(nfields):
            if e[i] < lo[i] or e[i] > hi[i]:
                return None
        c = r[k]
        if isinstance(c, int) and isinstance(lc, int) and c % lc == 0:
            c = c // lc
        else:
            c = Fraction(c) / lc
            if c.denominator == 1:
                c = c.numerator
        quo[t] = c
        for kb, cb in bitems:
            kk = kb + t
            s = r.get(kk, 0) - c * cb
            if s:
                r[kk] = s
            else:
                r.pop(kk, None)
    return quo
