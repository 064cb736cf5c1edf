"""Invariant bilinear forms on seminormal representations."""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import MPartition, StandardMTableau, apply_adjacent_transposition, standard_tableaux
from .matrix import Matrix
from .repn import Field, RelationReport, Representation, build_representation
from .scalar import ParamSpec, q_number

KINDS = ("bilinear_Sminus", "omega_S", "varpi_S")


class BasisMismatch(ValueError):
    pass


@dataclass
class GramMatrix:
    shape: MPartition
    basis: list
    entries: list
    field: Field

    def matrix(self) -> Matrix:
        return self.field.diagonal(self.entries)

    def inverse_matrix(self) -> Matrix:
        return self.field.diagonal([self.field.one / x for x in self.entries])


def gram_entry(field: Field, t: StandardMTableau):
    """Product over j < k with c_j, c_k not equal or adjacent of (q^-1 c_j - q c_k)/(c_j - c_k)."""
    cs = t.content_string()
    out = field.one
    for j in range(len(cs)):
        for k in range(j + 1, len(cs)):
            (a, x), (b, y) = cs[j], cs[k]
            if a == b and abs(x - y) <= 1:
                continue
            cj, ck = field.content(cs[j]), field.content(cs[k])
            out = out * ((field.qinv * cj - field.q * ck) / (cj - ck))
    return out


def gram_matrix(shape: MPartition, spec: ParamSpec | None = None) -> GramMatrix:
    field = Field(shape.m, spec)
    basis = standard_tableaux(shape)
    return GramMatrix(shape, basis, [gram_entry(field, t) for t in basis], field)


def gram_classical(field: Field, t: StandardMTableau):
    """One-component formula: product of (cc_j - cc_k - 1)_q / (cc_j - cc_k)_q over such pairs."""
    if t.shape.m != 1:
        raise ValueError("the classical content form needs m = 1")
    cs = [z for _, z in t.content_string()]
    out = field.one
    for j in range(len(cs)):
        for k in range(j + 1, len(cs)):
            d = cs[j] - cs[k]
            if abs(d) <= 1:
                continue
            out = out * field.scalar(q_number(d - 1, field.m)) / field.scalar(q_number(d, field.m))
    return out


def _check_basis(rep: Representation, G: GramMatrix):
    if rep.basis != G.basis or rep.field != G.field:
        raise BasisMismatch("Gram matrix and representation use different bases or fields")


def _omega_matrices(rep: Representation) -> list:
    """Generators with q, vk inverted, in the same basis."""
    f = rep.field
    if f.symbolic:
        return [g.map(lambda x: x.omega()) for _, g in rep.generators()]
    other = build_representation(rep.shape, f.spec.inverted(), rep.vacuum)
    return [g.map(lambda x: x, f.zero, f.one) for _, g in other.generators()]


def verify_invariance(rep: Representation, G: GramMatrix, kind: str) -> RelationReport:
    """``bilinear_Sminus``: A^T G = G A. ``omega_S`` and ``varpi_S``: A^T G omega(A) = G."""
    if kind not in KINDS:
        raise ValueError(f"unknown form kind {kind!r}; expected one of {KINDS}")
    _check_basis(rep, G)
    Gm = G.matrix()
    gens = rep.generators()
    if kind == "bilinear_Sminus":
        for name, A in gens:
            diff = (A.transpose() @ Gm).first_difference(Gm @ A)
            if diff is not None:
                return RelationReport(False, kind, (name,), diff, 1)
        return RelationReport(True, checked=len(gens))
    for (name, A), W in zip(gens, _omega_matrices(rep)):
        diff = (A.transpose() @ Gm @ W).first_difference(Gm)
        if diff is not None:
            return RelationReport(False, kind, (name,), diff, 1)
    return RelationReport(True, checked=len(gens))


def verify_orthogonality_squared(rep: Representation, G: GramMatrix) -> RelationReport:
    """In the basis rescaled by D with D^2 = G^-1 the generators are orthogonal and omega-unitary.

    Checked without square roots: A G^-1 (A^-1)^T = G^-1 and A G^-1 omega(A)^T = G^-1.
    """
    _check_basis(rep, G)
    f = rep.field
    Ginv = G.inverse_matrix()
    count = 0
    for (name, A), W in zip(rep.generators(), _omega_matrices(rep)):
        if name == "tau":
            Ainv = A.inverse()
        else:
            Ainv = A.add_scalar(-(f.q - f.qinv))
        count += 1
        diff = (A @ Ginv @ Ainv.transpose()).first_difference(Ginv)
        if diff is not None:
            return RelationReport(False, "orthogonal", (name,), diff, count)
        diff = (A @ Ginv @ W.transpose()).first_difference(Ginv)
        if diff is not None:
            return RelationReport(False, "omega-unitary", (name,), diff, count)
    return RelationReport(True, checked=count)


def verify_neighbor_ratio(G: GramMatrix) -> RelationReport:
    """<X^s_i, X^s_i> = (q c_i - q^-1 c_(i+1))/(q^-1 c_i - q c_(i+1)) <X, X>."""
    f = G.field
    index = {t: j for j, t in enumerate(G.basis)}
    count = 0
    for j, t in enumerate(G.basis):
        for i in range(1, t.n):
            s = apply_adjacent_transposition(t, i)
            if s is None:
                continue
            count += 1
            c1, c2 = f.content(t.content(i)), f.content(t.content(i + 1))
            ratio = (f.q * c1 - f.qinv * c2) / (f.qinv * c1 - f.q * c2)
            if not (G.entries[index[s]] == ratio * G.entries[j]):
                return RelationReport(False, "neighbor-ratio", (i, str(t)), (index[s], j), count)
    return RelationReport(True, checked=count)


def verify_omega_stable(G: GramMatrix) -> bool:
    return all(x == x.omega() for x in G.entries)
