# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse polynomial kernels; same contract as the pure-Python module."""

from fractions import Fraction

cdef object FIELD_O = 4096
FIELD = 4096
HALF = 2048


cpdef dict mul(dict a, dict b):
    cdef dict out = {}
    cdef list bitems
    cdef object ka, ca, kb, cb, k, c
    if len(a) < len(b):
        a, b = b, a
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = ka + kb
            c = out.get(k, 0) + ca * cb
            if c:
                out[k] = c
            else:
                out.pop(k, None)
    return out


cpdef dict add(dict a, dict b):
    cdef dict out
    cdef object k, c, s
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


cpdef dict sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object k, c, s
    for k, c in b.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            del out[k]
    return out


cpdef dict scale(dict a, object c, object shift=0):
    if not c:
        return {}
    return {k + shift: v * c for k, v in a.items()}


cpdef tuple unpack(object key, int nfields):
    cdef list out = [0] * nfields
    cdef int i
    cdef object e
    for i in range(nfields - 1, -1, -1):
        e = (key + HALF) % FIELD_O - HALF
        out[i] = e
        key = (key - e) // FIELD_O
    return tuple(out)


cdef tuple _box(dict a, int nfields):
    cdef list lo = [None] * nfields
    cdef list hi = [None] * nfields
    cdef int i
    cdef tuple e
    for k in a:
        e = unpack(k, nfields)
        for i in range(nfields):
            if lo[i] is None or e[i] < lo[i]:
                lo[i] = e[i]
            if hi[i] is None or e[i] > hi[i]:
                hi[i] = e[i]
    return lo, hi


cpdef object divexact(dict a, dict b, int nfields):
    """Return a / b if b divides a exactly (as Laurent polynomials), else None."""
    cdef list lo, hi, alo, ahi, blo, bhi, bitems
    cdef dict r, quo
    cdef int i
    cdef tuple e
    cdef object lead, lc, k, t, c, kb, cb, kk, s
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    alo, ahi = _box(a, nfields)
    blo, bhi = _box(b, nfields)
    lo = [alo[i] - blo[i] for i in range(nfields)]
    hi = [ahi[i] - bhi[i] for i in range(nfields)]
    for i in range(nfields):
        if lo[i] > hi[i]:
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
        if type(c) is int and type(lc) is int and c % lc == 0:
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
