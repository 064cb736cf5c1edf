"""Pushing generators through tableaux and the resulting tensor modules."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .combinatorics import (
    MPartition, StandardMTableau, apply_adjacent_transposition, mpartitions, standard_tableaux,
)
from .matrix import Matrix, matrix_rank, row_echelon
from .repn import Field, Module, build_representation, idempotent, jm_matrices
from .scalar import ParamSpec, require_generic


class Residual(NamedTuple):
    """The algebra element left on the right: scalar + coefficient * sigma_index."""

    scalar: object
    sigma: object
    index: int


class PushTerm(NamedTuple):
    coeff: object
    tableau: StandardMTableau
    residual: Residual


def push_through(field: Field, gen: str, t: StandardMTableau) -> list:
    """Rewrite gen * X as a sum of coeff * X' * (residual), X' in {X, X^s_i}.

    ``gen`` is ``"tau"`` or ``"sigma<i>"``. tau * X = c(X|1) X. sigma_i * X is
    a multiple of X plus X^s_i times (sigma_i + (q-q^-1) c_i/(c_(i+1) - c_i)).
    """
    one, zero = field.one, field.zero
    if gen == "tau":
        return [PushTerm(field.content(t.content(1)), t, Residual(one, zero, 0))]
    if not gen.startswith("sigma"):
        raise ValueError(f"unknown generator {gen!r}")
    i = int(gen[5:])
    c1, c2 = field.content(t.content(i)), field.content(t.content(i + 1))
    k = field.q - field.qinv
    s = apply_adjacent_transposition(t, i)
    if s is None:
        a, b = t.cells[i - 1], t.cells[i]
        return [PushTerm(field.q if a.row == b.row else -field.qinv, t, Residual(one, zero, i))]
    return [
        PushTerm(-(k * c2 / (c1 - c2)), t, Residual(one, zero, i)),
        PushTerm(one, s, Residual(k * c1 / (c2 - c1), one, i)),
    ]


@dataclass
class TensorModule(Module):
    shapes: tuple = ()
    basis: list = None

    def index(self, word: tuple) -> int:
        idx = self._cache.get("index")
        if idx is None:
            idx = {b: i for i, b in enumerate(self.basis)}
            self._cache["index"] = idx
        return idx[word]


def _vacuum(field: Field, n: int) -> Module:
    tau = field.diagonal([field.v(1)]) if n >= 1 else None
    return Module(field, n, 1, tau, [field.diagonal([field.q]) for _ in range(1, n)])


def build_tensor_module(shapes, spec: ParamSpec | None = None) -> TensorModule:
    """Module on tuples (X_l, ..., X_1) of standard tableaux, leftmost factor first.

    The leftmost tableau absorbs tau; sigma_i pushes through it and the
    residual acts on the remaining factors. The rightmost factor acts on the
    vacuum (sigma -> q, tau -> v1), so one factor gives the ordinary
    seminormal representation.
    """
    shapes = tuple(shapes)
    if not shapes:
        raise ValueError("need at least one shape")
    m, n = shapes[0].m, shapes[0].size
    for s in shapes:
        if s.m != m or s.size != n:
            raise ValueError("all shapes must be m-partitions of the same n")
    if spec is not None:
        require_generic(spec, n, m)
    field = Field(m, spec)
    return _tensor(field, shapes)


def _tensor(field: Field, shapes: tuple) -> TensorModule:
    n = shapes[0].size
    left = standard_tableaux(shapes[0])
    if len(shapes) == 1:
        rest = _vacuum(field, n)
        rest_basis = [()]
    else:
        rest = _tensor(field, shapes[1:])
        rest_basis = rest.basis
    r = rest.dim
    lindex = {t: i for i, t in enumerate(left)}
    basis = [(t,) + w for t in left for w in rest_basis]
    dim = len(basis)
    tau = None
    if n >= 1:
        tau = field.diagonal([field.content(t.content(1)) for t in left for _ in range(r)])
    sigmas = []
    for i in range(1, n):
        rows = [dict() for _ in range(dim)]
        rs = rest.sigmas[i - 1]
        rs_cols = rs.transpose().rows
        for a, t in enumerate(left):
            terms = push_through(field, f"sigma{i}", t)
            for term in terms:
                b = lindex[term.tableau]
                res = term.residual
                for w in range(r):
                    col = a * r + w
                    if not res.sigma:
                        # coefficient times identity on the rest
                        _acc(rows, b * r + w, col, term.coeff * res.scalar)
                        continue
                    for u, x in rs_cols[w].items():
                        _acc(rows, b * r + u, col, term.coeff * x)
                    if res.scalar:
                        _acc(rows, b * r + w, col, term.coeff * res.scalar)
        sigmas.append(Matrix(dim, dim, [{j: x for j, x in row.items() if x} for row in rows],
                             field.zero, field.one))
    return TensorModule(field, n, dim, tau, sigmas, shapes=shapes, basis=basis)


def _acc(rows, i, j, x):
    if not x:
        return
    row = rows[i]
    row[j] = row[j] + x if j in row else x


def restrict_module(module: Module) -> Module:
    """The same space as a module over H(m,1,n-1)."""
    if module.n == 0:
        raise ValueError("nothing to restrict")
    tau = module.tau if module.n >= 2 else None
    return Module(module.field, module.n - 1, module.dim, tau, list(module.sigmas[:-1]))


def decompose(module: Module, spec: ParamSpec | None = None) -> dict:
    """Multiplicity of each irreducible: the rank of E_X for X of that shape.

    Every standard X of a shape must give the same rank; this is asserted.
    Symbolic modules are evaluated at ``spec`` first.
    """
    if module.field.symbolic:
        if spec is None:
            raise ValueError("decompose needs a ParamSpec for a symbolic module")
        from .repn import specialize_module
        module = specialize_module(module, spec)
    out = {}
    total = 0
    memo: dict = {}
    for mu in mpartitions(module.m, module.n):
        ranks = {matrix_rank(idempotent(t, module, memo)) for t in standard_tableaux(mu)}
        if len(ranks) != 1:
            raise AssertionError(f"idempotents of shape {mu} have different ranks {sorted(ranks)}")
        r = ranks.pop()
        if r:
            out[mu] = r
            total += r * len(standard_tableaux(mu))
    if total != module.dim:
        raise AssertionError(f"multiplicities account for dimension {total}, module has {module.dim}")
    return out


def expected_decomposition(shapes) -> dict:
    """The leftmost shape, with multiplicity the product of the other factors' dimensions."""
    mult = 1
    for s in shapes[1:]:
        mult *= len(standard_tableaux(s))
    return {shapes[0]: mult}


def verify_restriction_compatibility(shapes, spec: ParamSpec) -> bool:
    """Decomposing the restricted module agrees with restricting each factor."""
    shapes = tuple(shapes)
    module = build_tensor_module(shapes, spec)
    lhs = Counter(decompose(restrict_module(module)))
    rhs: Counter = Counter()
    for nodes in product(*(s.removable() for s in shapes)):
        smaller = tuple(s.remove(a) for s, a in zip(shapes, nodes))
        if smaller[0].size == 0:
            rhs[smaller[0]] += 1
            continue
        rhs.update(decompose(build_tensor_module(smaller, spec)))
    return lhs == rhs


def subspace_action(module: Module, vectors: list) -> list | None:
    """Matrices of the generators on span(vectors), or None if the span is not invariant.

    ``vectors`` are sparse dicts {basis index: coefficient}, assumed independent.
    Returns one matrix per generator in module.generators() order (column k is
    the image of vector k).
    """
    f = module.field
    k = len(vectors)
    out = []
    for _, g in module.generators():
        cols = []
        for vec in vectors:
            img = g.apply(vec)
            coeffs = _solve_in_span(vectors, img, f.zero)
            if coeffs is None:
                return None
            cols.append(coeffs)
        rows = [dict() for _ in range(k)]
        for j, c in enumerate(cols):
            for i, x in c.items():
                if x:
                    rows[i][j] = x
        out.append(Matrix(k, k, rows, f.zero, f.one))
    return out


def _solve_in_span(vectors: list, target: dict, zero):
    """Coefficients c with sum c_k vectors[k] == target, or None."""
    k = len(vectors)
    rows = []
    for b in sorted(set().union(*vectors) | set(target)):
        row = {j: v[b] for j, v in enumerate(vectors) if v.get(b)}
        if target.get(b):
            row[k] = target[b]
        if row:
            rows.append(row)
    piv = row_echelon(rows)
    if k in piv:
        return None
    sol: dict = {}
    for c in sorted(piv, reverse=True):
        acc = piv[c].get(k, zero)
        for j, x in piv[c].items():
            if j != c and j != k and j in sol:
                acc = acc - x * sol[j]
        sol[c] = acc
    return {c: x for c, x in sol.items() if x}
