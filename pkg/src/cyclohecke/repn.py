"""Seminormal matrices for H(m,1,n) and the checks built on them."""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import NamedTuple

from .combinatorics import (
    MPartition, StandardMTableau, apply_adjacent_transposition, standard_tableaux,
)
from .matrix import Matrix, rank
from .scalar import ParamSpec, RatFn, require_generic


class Field:
    """Where matrix entries live: symbolic RatFn in q, v1..vm or exact rationals at a spec."""

    def __init__(self, m: int, spec: ParamSpec | None = None):
        self.m = m
        self.spec = spec
        if spec is None:
            self.zero = RatFn.const(0, m)
            self.one = RatFn.const(1, m)
            self.q = RatFn.q(m)
            self.qinv = RatFn.q(m, -1)
            self._v = [RatFn.v(k, m) for k in range(1, m + 1)]
        else:
            if spec.m != m:
                raise ValueError(f"spec has {spec.m} v-values but m = {m}")
            self.zero = Fraction(0)
            self.one = Fraction(1)
            self.q = spec.q
            self.qinv = 1 / spec.q
            self._v = list(spec.v)
        self._content: dict = {}

    @property
    def symbolic(self) -> bool:
        return self.spec is None

    def v(self, k: int):
        return self._v[k - 1]

    def content(self, kz: tuple):
        """Value of vk * q^(2z)."""
        c = self._content.get(kz)
        if c is None:
            k, z = kz
            if self.spec is None:
                c = RatFn(self._v[k - 1].num.shift(_qkey(2 * z, self.m), abs(2 * z)), None, False)
            else:
                c = self._v[k - 1] * self.q ** (2 * z)
            self._content[kz] = c
        return c

    def scalar(self, x):
        """Bring an int, Fraction or RatFn into this field."""
        if self.spec is None:
            if isinstance(x, RatFn):
                return x
            return RatFn.const(x, self.m)
        if isinstance(x, RatFn):
            return x.specialize(self.spec.q, self.spec.v)
        return Fraction(x)

    def identity(self, n: int) -> Matrix:
        return Matrix.identity(n, self.zero, self.one)

    def zeros(self, n: int, k: int | None = None) -> Matrix:
        return Matrix(n, n if k is None else k, None, self.zero, self.one)

    def diagonal(self, entries) -> Matrix:
        return Matrix.diagonal(entries, self.zero, self.one)

    def __eq__(self, other):
        return isinstance(other, Field) and self.m == other.m and self.spec == other.spec

    def __hash__(self):
        return hash((self.m, self.spec))


def _qkey(e: int, m: int) -> int:
    from .scalar.laurent import pack
    return pack((e,) + (0,) * m)


@dataclass
class Module:
    """Matrices for tau, sigma_1 .. sigma_(n-1) acting on an exact vector space."""

    field: Field
    n: int
    dim: int
    tau: Matrix | None
    sigmas: list
    _cache: dict = dc_field(default_factory=dict, repr=False)

    @property
    def m(self) -> int:
        return self.field.m

    def sigma(self, i: int) -> Matrix:
        if not 1 <= i < self.n:
            raise ValueError(f"sigma_{i} is not a generator of H(m,1,{self.n})")
        return self.sigmas[i - 1]

    def generators(self) -> list:
        out = []
        if self.tau is not None:
            out.append(("tau", self.tau))
        out.extend((f"sigma{i}", s) for i, s in enumerate(self.sigmas, start=1))
        return out

    def identity(self) -> Matrix:
        return self.field.identity(self.dim)


@dataclass
class Representation(Module):
    shape: MPartition | None = None
    basis: list = dc_field(default_factory=list)
    vacuum: str = "q"

    def index(self, t: StandardMTableau) -> int:
        idx = self._cache.get("index")
        if idx is None:
            idx = {b: i for i, b in enumerate(self.basis)}
            self._cache["index"] = idx
        return idx[t]


def _local_coefficients(field: Field, c1, c2, vacuum: str):
    """Diagonal and off-diagonal seminormal coefficients for contents c1 = c(X|i), c2 = c(X|i+1)."""
    q, qi = field.q, field.qinv
    d = c2 - c1
    a = (q - qi) * c2 / d
    if vacuum == "q":
        b = (q * c2 - qi * c1) / d
    else:
        b = (q * c1 - qi * c2) / d
    return a, b


def build_representation(shape: MPartition, spec: ParamSpec | None = None, vacuum: str = "q") -> Representation:
    """Seminormal representation on standard m-tableaux of ``shape``.

    Matrices act on column vectors: column j is the image of basis vector j.
    ``vacuum`` chooses the value of sigma on the one-dimensional start,
    ``"q"`` (the usual choice) or ``"-q^-1"``.
    """
    if vacuum not in ("q", "-q^-1"):
        raise ValueError("vacuum must be 'q' or '-q^-1'")
    m, n = shape.m, shape.size
    if spec is not None:
        require_generic(spec, n, m)
    field = Field(m, spec)
    basis = standard_tableaux(shape)
    index = {t: i for i, t in enumerate(basis)}
    dim = len(basis)
    tau = None
    if n >= 1:
        tau = field.diagonal([field.content(t.content(1)) for t in basis])
    local: dict = {}
    sigmas = []
    for i in range(1, n):
        rows = [dict() for _ in range(dim)]
        for j, t in enumerate(basis):
            s = apply_adjacent_transposition(t, i)
            if s is None:
                a, b = t.cells[i - 1], t.cells[i]
                rows[j][j] = field.q if a.row == b.row else -field.qinv
                continue
            key = (t.content(i), t.content(i + 1))
            coef = local.get(key)
            if coef is None:
                coef = _local_coefficients(field, field.content(key[0]), field.content(key[1]), vacuum)
                local[key] = coef
            rows[j][j] = coef[0]
            rows[index[s]][j] = coef[1]
        sigmas.append(Matrix(dim, dim, rows, field.zero, field.one))
    rep = Representation(field, n, dim, tau, sigmas, shape=shape, basis=basis, vacuum=vacuum)
    rep._cache["index"] = index
    return rep


def vacuum_constant(field: Field, t: StandardMTableau):
    """Diagonal entry taking the q-vacuum basis to the -q^-1-vacuum basis.

    Product of (q c_j - q^-1 c_k) over j < k whose contents are neither equal
    nor q^(+-2) apart; conjugating by these entries maps one set of generator
    matrices to the other.
    """
    cs = t.content_string()
    out = field.one
    for j in range(len(cs)):
        for k in range(j + 1, len(cs)):
            (a, x), (b, y) = cs[j], cs[k]
            if a == b and abs(x - y) <= 1:
                continue
            out = out * (field.q * field.content(cs[j]) - field.qinv * field.content(cs[k]))
    return out


def verify_vacuum_isomorphism(shape: MPartition, spec: ParamSpec | None = None) -> "RelationReport":
    """D^-1 A D equals the -q^-1-vacuum matrix for every generator A, D = diag(vacuum_constant)."""
    a = build_representation(shape, spec, "q")
    b = build_representation(shape, spec, "-q^-1")
    f = a.field
    cs = [vacuum_constant(f, t) for t in a.basis]
    D = f.diagonal(cs)
    Dinv = f.diagonal([f.one / c for c in cs])
    count = 0
    for (name, x), (_, y) in zip(a.generators(), b.generators()):
        count += 1
        diff = (Dinv @ x @ D).first_difference(y)
        if diff is not None:
            return RelationReport(False, "vacuum-change", (name,), diff, count)
    return RelationReport(True, checked=count)


def specialize_module(module: Module, spec: ParamSpec) -> Module:
    """Evaluate a symbolic module at ``spec``."""
    if not module.field.symbolic:
        raise ValueError("module is already numeric")
    require_generic(spec, module.n, module.m)
    field = Field(module.m, spec)
    conv = lambda x: x.specialize(spec.q, spec.v)  # noqa: E731
    tau = module.tau.map(conv, field.zero, field.one) if module.tau is not None else None
    sig = [s.map(conv, field.zero, field.one) for s in module.sigmas]
    if isinstance(module, Representation):
        return Representation(field, module.n, module.dim, tau, sig, shape=module.shape,
                              basis=module.basis, vacuum=module.vacuum)
    return Module(field, module.n, module.dim, tau, sig)


def direct_sum(a: Module, b: Module) -> Module:
    if a.field != b.field or a.n != b.n:
        raise ValueError("direct sum needs modules over the same algebra and field")
    off = a.dim

    def stack(x: Matrix, y: Matrix) -> Matrix:
        rows = [dict(r) for r in x.rows] + [{j + off: v for j, v in r.items()} for r in y.rows]
        return Matrix(a.dim + b.dim, a.dim + b.dim, rows, a.field.zero, a.field.one)

    tau = stack(a.tau, b.tau) if a.tau is not None else None
    return Module(a.field, a.n, a.dim + b.dim, tau, [stack(x, y) for x, y in zip(a.sigmas, b.sigmas)])


# defining relations

class RelationReport(NamedTuple):
    ok: bool
    relation: str | None = None
    indices: tuple = ()
    entry: tuple | None = None
    checked: int = 0

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"ok ({self.checked} relations)"
        return f"{self.relation}{self.indices} fails at entry {self.entry}"


def _relations(module: Module):
    """Yield (name, indices, lhs, rhs) for every defining relation."""
    f = module.field
    n = module.n
    s = module.sigmas
    tau = module.tau
    for i in range(1, n):
        si = s[i - 1]
        yield "quadratic", (i,), si @ si, si.scale(f.q - f.qinv).add_scalar(f.one)
    for i in range(1, n - 1):
        a, b = s[i - 1], s[i]
        yield "braid", (i, i + 1), a @ b @ a, b @ a @ b
    for i in range(1, n):
        for j in range(i + 2, n):
            a, b = s[i - 1], s[j - 1]
            yield "commute", (i, j), a @ b, b @ a
    if tau is not None:
        if n >= 2:
            ts = tau @ s[0]
            yield "tau-sigma1", (0, 1), ts @ ts, s[0] @ tau @ s[0] @ tau
        for i in range(2, n):
            yield "tau-commute", (0, i), tau @ s[i - 1], s[i - 1] @ tau
        prod = module.identity()
        for k in range(1, module.m + 1):
            prod = prod @ tau.add_scalar(-f.v(k))
        yield "cyclotomic", (0,), prod, f.zeros(module.dim)


def verify_defining_relations(module: Module) -> RelationReport:
    count = 0
    for name, idx, lhs, rhs in _relations(module):
        count += 1
        diff = lhs.first_difference(rhs)
        if diff is not None:
            return RelationReport(False, name, idx, diff, count)
    return RelationReport(True, checked=count)


# Jucys-Murphy elements

def jm_matrices(module: Module) -> list:
    """J_1 = tau, J_(i+1) = sigma_i J_i sigma_i."""
    cached = module._cache.get("jm")
    if cached is not None:
        return cached
    if module.tau is None:
        return []
    out = [module.tau]
    for i in range(1, module.n):
        s = module.sigmas[i - 1]
        out.append(s @ out[-1] @ s)
    module._cache["jm"] = out
    return out


def verify_jm_spectrum(rep: Representation) -> RelationReport:
    """Each J_i is diagonal with entry c(X|i) at X."""
    f = rep.field
    count = 0
    for i, J in enumerate(jm_matrices(rep), start=1):
        count += 1
        expected = f.diagonal([f.content(t.content(i)) for t in rep.basis])
        diff = J.first_difference(expected)
        if diff is not None:
            return RelationReport(False, "jm-spectrum", (i,), diff, count)
    return RelationReport(True, checked=count)


def intertwiner_matrices(module: Module) -> list:
    """U_(i+1) = sigma_i J_i - J_i sigma_i for i = 1 .. n-1."""
    J = jm_matrices(module)
    return [s @ J[i] - J[i] @ s for i, s in enumerate(module.sigmas)]


def verify_intertwiners(rep: Representation) -> RelationReport:
    """U_(i+1) sends X to (q^-1 c(X|i) - q c(X|i+1)) X^(s_i), and to 0 if that is not standard."""
    f = rep.field
    count = 0
    for i, U in enumerate(intertwiner_matrices(rep), start=1):
        count += 1
        exp = f.zeros(rep.dim)
        for j, t in enumerate(rep.basis):
            s = apply_adjacent_transposition(t, i)
            if s is not None:
                exp[rep.index(s), j] = f.qinv * f.content(t.content(i)) - f.q * f.content(t.content(i + 1))
        diff = U.first_difference(exp)
        if diff is not None:
            return RelationReport(False, "intertwiner", (i + 1,), diff, count)
    return RelationReport(True, checked=count)


# Baxterized elements

def baxter_f(field: Field, alpha, beta):
    """f(alpha, beta) = (q alpha - q^-1 beta)/(alpha - beta)."""
    d = alpha - beta
    if not d:
        raise ValueError("spectral parameters must differ")
    return (field.q * alpha - field.qinv * beta) / d


def baxterized_sigma(module: Module, i: int, alpha, beta) -> Matrix:
    """sigma_i(alpha, beta) = sigma_i + (q - q^-1) beta/(alpha - beta)."""
    f = module.field
    d = alpha - beta
    if not d:
        raise ValueError("spectral parameters must differ")
    return module.sigma(i).add_scalar((f.q - f.qinv) * beta / d)


def default_spectral(field: Field):
    """Three distinct generic spectral parameters."""
    if field.m >= 2:
        return field.v(1), field.v(2), field.v(1) * field.q ** 2
    return field.v(1), field.v(1) * field.q ** 2, field.v(1) * field.q ** 6


def verify_baxter_identities(module: Module, params=None) -> RelationReport:
    """Unitarity, Yang-Baxter and far commutativity of the Baxterized elements."""
    f = module.field
    a, b, c = params if params is not None else default_spectral(f)
    n = module.n
    count = 0
    for i in range(1, n):
        count += 1
        lhs = baxterized_sigma(module, i, a, b) @ baxterized_sigma(module, i, b, a)
        rhs = f.identity(module.dim).scale(baxter_f(f, a, b) * baxter_f(f, b, a))
        diff = lhs.first_difference(rhs)
        if diff is not None:
            return RelationReport(False, "unitarity", (i,), diff, count)
    for i in range(1, n - 1):
        count += 1
        lhs = baxterized_sigma(module, i, a, b) @ baxterized_sigma(module, i + 1, a, c) @ baxterized_sigma(module, i, b, c)
        rhs = baxterized_sigma(module, i + 1, b, c) @ baxterized_sigma(module, i, a, c) @ baxterized_sigma(module, i + 1, a, b)
        diff = lhs.first_difference(rhs)
        if diff is not None:
            return RelationReport(False, "yang-baxter", (i, i + 1), diff, count)
    for i in range(1, n):
        for j in range(i + 2, n):
            count += 1
            x = baxterized_sigma(module, i, a, b)
            y = baxterized_sigma(module, j, c, a)
            diff = (x @ y).first_difference(y @ x)
            if diff is not None:
                return RelationReport(False, "far-commute", (i, j), diff, count)
    return RelationReport(True, checked=count)


# restriction

@dataclass
class RestrictionBlock:
    shape: MPartition
    indices: list
    module: Module


def restriction(rep: Representation) -> list:
    """Split the restriction to H(m,1,n-1) by the shape of the entries 1..n-1."""
    if rep.n == 0:
        raise ValueError("nothing to restrict")
    groups: dict = {}
    for j, t in enumerate(rep.basis):
        groups.setdefault(t.restrict().shape, []).append(j)
    out = []
    for node in rep.shape.removable():
        mu = rep.shape.remove(node)
        idx = groups[mu]
        tau = rep.tau.submatrix(idx) if rep.n >= 2 else None
        sig = [s.submatrix(idx) for s in rep.sigmas[:-1]]
        out.append(RestrictionBlock(mu, idx, Module(rep.field, rep.n - 1, len(idx), tau, sig)))
    return out


def verify_restriction(rep: Representation) -> RelationReport:
    """Blocks are invariant and equal the representations of the smaller shapes."""
    count = 0
    gens = rep.generators()[:-1] if rep.n >= 2 else []
    for block in restriction(rep):
        inside = set(block.indices)
        for name, g in gens:
            for j in block.indices:
                for i in g.column(j):
                    if i not in inside:
                        return RelationReport(False, "restriction-invariance", (name,), (i, j), count)
        count += 1
        small = build_representation(block.shape, rep.field.spec, rep.vacuum)
        for (name, x), (_, y) in zip(block.module.generators(), small.generators()):
            diff = x.first_difference(y)
            if diff is not None:
                return RelationReport(False, "restriction-block", (str(block.shape), name), diff, count)
    return RelationReport(True, checked=count)


# idempotents

def idempotent(t: StandardMTableau, ambient: Module, _memo: dict | None = None) -> Matrix:
    """E_X from E_X' and the Jucys-Murphy element J_n, evaluated in ``ambient``."""
    memo = ambient._cache.setdefault("idempotents", {}) if _memo is None else _memo
    got = memo.get(t)
    if got is not None:
        return got
    f = ambient.field
    if t.n == 0:
        e = ambient.identity()
    else:
        if t.n > ambient.n:
            raise ValueError("tableau is larger than the ambient algebra")
        prev = t.restrict()
        e = idempotent(prev, ambient, memo)
        J = jm_matrices(ambient)[t.n - 1]
        alpha = t.cells[-1]
        ca = f.content((alpha.pos, alpha.diagonal))
        for beta in prev.shape.addable():
            if beta == alpha:
                continue
            cb = f.content((beta.pos, beta.diagonal))
            e = e @ J.add_scalar(-cb).scale(f.one / (ca - cb))
    memo[t] = e
    return e


def verify_idempotents(rep: Representation) -> RelationReport:
    """E_X is the diagonal matrix unit at X, the E_X are orthogonal and sum to Id."""
    f = rep.field
    count = 0
    total = f.zeros(rep.dim)
    for j, t in enumerate(rep.basis):
        e = idempotent(t, rep)
        unit = f.zeros(rep.dim)
        unit[j, j] = f.one
        count += 1
        diff = e.first_difference(unit)
        if diff is not None:
            return RelationReport(False, "idempotent", (str(t),), diff, count)
        total = total + e
    diff = total.first_difference(f.identity(rep.dim))
    if diff is not None:
        return RelationReport(False, "completeness", (), diff, count)
    return RelationReport(True, checked=count)


def verify_matrix_unit_identity(rep: Representation, i: int, t: StandardMTableau) -> RelationReport:
    """(sigma_i + (q-q^-1)c2/(c1-c2)) E_X == E_(X^s_i) (sigma_i + (q-q^-1)c1/(c2-c1)), nonzero."""
    s = apply_adjacent_transposition(t, i)
    if s is None:
        raise ValueError(f"s_{i} applied to {t} is not standard")
    if t.shape != rep.shape:
        raise ValueError("tableau is not in the basis of the representation")
    f = rep.field
    c1 = f.content(t.content(i))
    c2 = f.content(t.content(i + 1))
    sig = rep.sigma(i)
    lhs = sig.add_scalar((f.q - f.qinv) * c2 / (c1 - c2)) @ idempotent(t, rep)
    rhs = idempotent(s, rep) @ sig.add_scalar((f.q - f.qinv) * c1 / (c2 - c1))
    diff = lhs.first_difference(rhs)
    if diff is not None:
        return RelationReport(False, "matrix-unit", (i, str(t)), diff, 1)
    if lhs.is_zero():
        return RelationReport(False, "matrix-unit-zero", (i, str(t)), None, 1)
    return RelationReport(True, checked=1)


# affine Hecke algebra of rank two

@dataclass
class AffineH2Rep:
    X: Matrix
    Y: Matrix
    sigma: Matrix


def h2_affine_irreps(field: Field, a, b=None, eps: int = 1) -> AffineH2Rep:
    """Irreducible representations of the affine algebra on X, Y, sigma.

    With ``b`` None: the one-dimensional X -> a, Y -> q^(2 eps) a, sigma -> eps q^eps.
    Otherwise the two-dimensional one with X = diag(a, b), Y = diag(b, a).
    """
    q, qi = field.q, field.qinv
    one = field.one
    if b is None:
        if eps not in (1, -1):
            raise ValueError("eps must be 1 or -1")
        y = a * q ** 2 if eps == 1 else a * qi ** 2
        s = q if eps == 1 else -qi
        d = lambda x: field.diagonal([x])  # noqa: E731
        return AffineH2Rep(d(a), d(y), d(s))
    for bad in (a, a * q ** 2, a * qi ** 2):
        if not (b - bad):
            raise ValueError("degenerate parameters: b must differ from a, q^2 a and q^-2 a")
    d = b - a
    k = q - qi
    sigma = Matrix.from_dense([[k * b / d, one - k * k * a * b / (d * d)], [one, -(k * a / d)]], field.zero, one)
    return AffineH2Rep(field.diagonal([a, b]), field.diagonal([b, a]), sigma)


def verify_h2_relations(field: Field, rep: AffineH2Rep) -> bool:
    q, qi = field.q, field.qinv
    s, X, Y = rep.sigma, rep.X, rep.Y
    dim = s.nrows
    ok = (X @ Y).equals(Y @ X)
    ok = ok and (s @ X @ s).equals(Y)
    ok = ok and (s @ s).equals(s.scale(q - qi).add_scalar(field.one))
    return ok and dim in (1, 2)


# commutant

def commutant_dimension(module: Module, spec: ParamSpec | None = None) -> int:
    """Dimension of {M : M g = g M for every generator g}, by exact rational elimination."""
    if module.field.symbolic:
        if spec is None:
            raise ValueError("a ParamSpec is needed for a symbolic module")
        module = specialize_module(module, spec)
    d = module.dim
    eqs = []
    for _, g in module.generators():
        gt = g.transpose().rows
        for i in range(d):
            for j in range(d):
                # (M g - g M)[i][j] = sum_k M[i][k] g[k][j] - sum_k g[i][k] M[k][j]
                row: dict = {}
                for k, x in gt[j].items():
                    row[i * d + k] = row.get(i * d + k, 0) + x
                for k, x in g.rows[i].items():
                    row[k * d + j] = row.get(k * d + j, 0) - x
                row = {c: x for c, x in row.items() if x}
                if row:
                    eqs.append(row)
    return d * d - rank(eqs)


# traces of words

_WORD = re.compile(r"\s*(tau|sigma(\d+)|T(\d+)|t)(?:\^(-?\d+))?")


def parse_word(text: str) -> list:
    """``"sigma1 sigma3^-1 tau"`` -> [(1, 1), (3, -1), (0, 1)]; index 0 is tau."""
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _WORD.match(text, pos)
        if not mt:
            raise ValueError(f"cannot parse generator word at position {pos}: {text[pos:]!r}")
        if mt.group(1) in ("tau", "t"):
            idx = 0
        else:
            idx = int(mt.group(2) or mt.group(3))
        out.append((idx, int(mt.group(4) or 1)))
        pos = mt.end()
        while pos < len(text) and text[pos] in " *,":
            pos += 1
    return out


def word_matrix(module: Module, word) -> Matrix:
    if isinstance(word, str):
        word = parse_word(word)
    f = module.field
    out = module.identity()
    for idx, e in word:
        g = module.tau if idx == 0 else module.sigma(idx)
        if g is None:
            raise ValueError("tau is not available when n = 0")
        if e < 0:
            if idx == 0:
                g = g.inverse()
            else:
                g = g.add_scalar(-(f.q - f.qinv))
        for _ in range(abs(e)):
            out = out @ g
    return out


def word_trace(module: Module, word):
    return word_matrix(module, word).trace()
