"""JSON forms of representations, Gram diagonals and tensor decompositions.

Scalars are written as strings: rational functions in the text grammar of
``scalar.parse``, or ``a/b`` rationals for a numeric specialization.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .combinatorics import MPartition, StandardMTableau
from .matrix import Matrix
from .repn import Field, Representation
from .scalar import ParamSpec, RatFn, parse, render


def scalar_text(x) -> str:
    if isinstance(x, RatFn):
        return render(x)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_from_text(text: str, field: Field):
    if field.symbolic:
        return parse(text, field.m)
    return Fraction(text)


def matrix_rows(M: Matrix) -> list:
    return [[scalar_text(x) for x in row] for row in M.to_dense()]


def matrix_from_rows(rows: list, field: Field) -> Matrix:
    return Matrix.from_dense([[scalar_from_text(x, field) for x in row] for row in rows], field.zero, field.one)


def _spec_dict(spec: ParamSpec | None):
    if spec is None:
        return None
    return {"q": scalar_text(spec.q), "v": [scalar_text(x) for x in spec.v]}


def rep_to_dict(rep: Representation) -> dict:
    return {
        "shape": rep.shape.to_text(),
        "m": rep.m,
        "n": rep.n,
        "params": _spec_dict(rep.field.spec),
        "vacuum": rep.vacuum,
        "basis": [t.to_text() for t in rep.basis],
        "generators": {name: matrix_rows(g) for name, g in rep.generators()},
    }


def rep_to_json(rep: Representation) -> str:
    return json.dumps(rep_to_dict(rep), indent=2)


def rep_from_json(text: str) -> Representation:
    data = json.loads(text)
    m = data["m"]
    params = data.get("params")
    spec = None if params is None else ParamSpec(Fraction(params["q"]), tuple(Fraction(x) for x in params["v"]))
    field = Field(m, spec)
    gens = data["generators"]
    n = data["n"]
    tau = matrix_from_rows(gens["tau"], field) if "tau" in gens else None
    sigmas = [matrix_from_rows(gens[f"sigma{i}"], field) for i in range(1, n)]
    basis = [StandardMTableau.parse(t) for t in data["basis"]]
    return Representation(field, n, len(basis), tau, sigmas, shape=MPartition.parse(data["shape"], m),
                          basis=basis, vacuum=data.get("vacuum", "q"))


def gram_to_dict(G) -> dict:
    return {
        "shape": G.shape.to_text(),
        "basis": [t.to_text() for t in G.basis],
        "diagonal": {str(i): scalar_text(x) for i, x in enumerate(G.entries)},
    }


def decomposition_to_list(dec: dict) -> list:
    return [{"shape": k.to_text(), "multiplicity": v} for k, v in sorted(dec.items(), key=lambda kv: kv[0].parts)]
