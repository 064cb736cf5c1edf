"""Published reference matrices, as text in the rational-function grammar.

``[k]`` stands for the quantum integer k_q. Dense matrices list rows; the
column j of a generator matrix is the image of basis vector j.
"""

from __future__ import annotations

import re

from .combinatorics import MPartition, StandardMTableau, standard_tableaux
from .matrix import Matrix
from .scalar import RatFn, parse, q_number

_QNUM = re.compile(r"\[(\d+)\]")


def expr(text: str, m: int) -> RatFn:
    def sub(mt):
        return "(" + str(q_number(int(mt.group(1)), m)) + ")"
    return parse(_QNUM.sub(sub, text), m)


def dense(rows, m: int, prefactor: str = "1") -> Matrix:
    pre = expr(prefactor, m)
    zero, one = RatFn.const(0, m), RatFn.const(1, m)
    return Matrix.from_dense([[expr(x, m) * pre for x in r] for r in rows], zero, one)


def diag(entries, m: int) -> Matrix:
    n = len(entries)
    rows = [["0"] * n for _ in range(n)]
    for i, x in enumerate(entries):
        rows[i][i] = x
    return dense(rows, m)


# Two-component examples -----------------------------------------------------

_A = "-(q-q^-1)*v2/(v1-v2)"
_B = "(q*v1-q^-1*v2)/(v1-v2)"
_C = "(q*v2-q^-1*v1)/(v2-v1)"
_D = "-(q-q^-1)*v1/(v2-v1)"
_E = "-(q-q^-1)*v2/(v1*q^-2-v2)"
_F = "(v1*q^-1-q^-1*v2)/(v1*q^-2-v2)"
_G = "(q*v2-v1*q^-3)/(v2-v1*q^-2)"
_H = "-(q-q^-1)*v1*q^-2/(v2-v1*q^-2)"
_M = "-(q-q^-1)*v2*q^2/(v1*q^-2-v2*q^2)"
_N = "(v1*q^-1-v2*q)/(v1*q^-2-v2*q^2)"
_O = "(v2*q^3-v1*q^-3)/(v2*q^2-v1*q^-2)"
_P = "-(q-q^-1)*v1*q^-2/(v2*q^2-v1*q^-2)"
_P_PRINTED = "-(q-q^-1)*v1*q^-2/(v2*q^2-v1*q^-1)"

TWO_COMPONENT = {
    "[[1],[1]]": {
        "sigma": [[[_A, _B], [_C, _D]]],
        "tau": ["v1", "v2"],
        "gram": ["(q^-1*v1-q*v2)/(v1-v2)", "(q*v1-q^-1*v2)/(v1-v2)"],
    },
    "[[1,1],[1]]": {
        "sigma": [
            [["-q^-1", "0", "0"], ["0", _A, _B], ["0", _C, _D]],
            [[_E, _F, "0"], [_G, _H, "0"], ["0", "0", "-q^-1"]],
        ],
        "tau": ["v1", "v1", "v2"],
        "gram": ["(q^-2*v1-q^2*v2)/(v1-v2)", "1", "(q*v1-q^-1*v2)/(q^-1*v1-q*v2)"],
    },
    "[[1,1],[2]]": {
        "sigma": [
            [["-q^-1", "0", "0", "0", "0", "0"],
             ["0", _A, "0", _B, "0", "0"],
             ["0", "0", _A, "0", _B, "0"],
             ["0", _C, "0", _D, "0", "0"],
             ["0", "0", _C, "0", _D, "0"],
             ["0", "0", "0", "0", "0", "q"]],
            [[_E, _F, "0", "0", "0", "0"],
             [_G, _H, "0", "0", "0", "0"],
             ["0", "0", "q", "0", "0", "0"],
             ["0", "0", "0", "-q^-1", "0", "0"],
             ["0", "0", "0", "0", "-(q-q^-1)*v2*q^2/(v1-v2*q^2)", "(q*v1-v2*q)/(v1-v2*q^2)"],
             ["0", "0", "0", "0", "(v2*q^3-q^-1*v1)/(v2*q^2-v1)", "-(q-q^-1)*v1/(v2*q^2-v1)"]],
            [["q", "0", "0", "0", "0", "0"],
             ["0", _M, _N, "0", "0", "0"],
             ["0", _O, _P, "0", "0", "0"],
             ["0", "0", "0", _M, _N, "0"],
             ["0", "0", "0", _O, _P, "0"],
             ["0", "0", "0", "0", "0", "-q^-1"]],
        ],
        "tau": ["v1", "v1", "v1", "v2", "v2", "v2"],
        "gram": [
            "(q^-2*v1-q^2*v2)*(q^-3*v1-q^3*v2)/((v1-v2)*(q^-1*v1-q*v2))",
            "(q^-3*v1-q^3*v2)/(q^-1*v1-q*v2)",
            "1",
            "(q*v1-q^-1*v2)*(q^-3*v1-q^3*v2)/(q^-1*v1-q*v2)^2",
            "(q*v1-q^-1*v2)/(q^-1*v1-q*v2)",
            "(v1-v2)*(q*v1-q^-1*v2)/((q^-1*v1-q*v2)*(q^-2*v1-q^2*v2))",
        ],
    },
}

# Entries whose printed form disagrees with the defining formula:
# (shape, generator index from 1, row, column) -> printed text.
MISPRINTS = {
    ("[[1,1],[2]]", 3, 2, 2): _P_PRINTED,
}


def two_component_basis(shape_text: str) -> list:
    return standard_tableaux(MPartition.parse(shape_text))


# One-component examples -----------------------------------------------------

REP21 = {
    "basis": ["[[[1,2],[3]]]", "[[[1,3],[2]]]"],
    "sigma": [
        ("1", [["q", "0"], ["0", "-q^-1"]]),
        ("1/[2]", [["-q^-2", "[3]"], ["1", "q^2"]]),
    ],
}

REP211 = {
    "basis": ["[[[1,2],[3],[4]]]", "[[[1,3],[2],[4]]]", "[[[1,4],[2],[3]]]"],
    "sigma": [
        ("1", [["q", "0", "0"], ["0", "-q^-1", "0"], ["0", "0", "-q^-1"]]),
        ("1/[2]", [["-q^-2", "[3]", "0"], ["1", "q^2", "0"], ["0", "0", "-q^-1*[2]"]]),
        ("1/[3]", [["-q^-1*[3]", "0", "0"], ["0", "-q^-3", "[4]"], ["0", "[2]", "q^3"]]),
    ],
}

SIGMA1_SIGMA3_211 = ("1/[3]", [["-[3]", "0", "0"], ["0", "q^-4", "-q^-1*[4]"], ["0", "-q^-1*[2]", "-q^2"]])

_Z = "0"
_DG2 = "-q^-1*[2]"
_DG3 = "-q^-1*[3]"


# Each tensor case: shapes (left, right), the right factor's basis in the
# order used for the printed matrices, printed sigma matrices, and subspaces
# given as lists of {(i, j): coefficient} with X_i Y_j indices from 1.
TENSOR_CASES = {
    "21x21": {
        "shapes": ("[[2,1]]", "[[2,1]]"),
        "right_basis": REP21["basis"],
        "target": REP21,
        "sigma": [
            ("1", [["q", _Z, _Z, _Z], [_Z, "q", _Z, _Z], [_Z, _Z, "-q^-1", _Z], [_Z, _Z, _Z, "-q^-1"]]),
            ("1/[2]", [["-q^-2", _Z, _Z, "[3]"],
                       [_Z, "-q^-2", "1", "q^2+q^-2"],
                       ["-q^2-q^-2", "[3]", "q^2", _Z],
                       ["1", _Z, _Z, "q^2"]]),
        ],
        "subspaces": [
            [{(1, 2): "1"}, {(2, 1): "[3]"}],
            [{(1, 1): "1", (1, 2): "1"}, {(2, 1): "1", (2, 2): "1"}],
        ],
    },
    "211x22": {
        "shapes": ("[[2,1,1]]", "[[2,2]]"),
        "right_basis": ["[[[1,2],[3,4]]]", "[[[1,3],[2,4]]]"],
        "target": REP211,
        "sigma": [
            ("1", [["q" if (i == j and i < 2) else ("-q^-1" if i == j else _Z) for j in range(6)] for i in range(6)]),
            ("1/[2]", [["-q^-2", _Z, _Z, "[3]", _Z, _Z],
                       [_Z, "-q^-2", "1", "q^2+q^-2", _Z, _Z],
                       ["-q^2-q^-2", "[3]", "q^2", _Z, _Z, _Z],
                       ["1", _Z, _Z, "q^2", _Z, _Z],
                       [_Z, _Z, _Z, _Z, _DG2, _Z],
                       [_Z, _Z, _Z, _Z, _Z, _DG2]]),
            ("1/[3]", [[_DG3, _Z, _Z, _Z, _Z, _Z],
                       [_Z, _DG3, _Z, _Z, _Z, _Z],
                       [_Z, _Z, "-q^-3", _Z, "[4]", _Z],
                       [_Z, _Z, _Z, "-q^-3", _Z, "-[2]"],
                       [_Z, _Z, "[2]", _Z, "q^3", _Z],
                       [_Z, _Z, _Z, "-[4]", _Z, "q^3"]]),
        ],
        "subspaces": [
            [{(1, 2): "1"}, {(2, 1): "[3]"}, {(3, 1): "[3]"}],
            [{(1, 1): "1", (1, 2): "1"}, {(2, 1): "1", (2, 2): "1"}, {(3, 1): "1", (3, 2): "-(q^2+q^-2)"}],
        ],
    },
    "211x211": {
        "shapes": ("[[2,1,1]]", "[[2,1,1]]"),
        "right_basis": REP211["basis"],
        "target": REP211,
        "sigma": [
            ("1", [["q" if (i == j and i < 3) else ("-q^-1" if i == j else _Z) for j in range(9)] for i in range(9)]),
            ("1/[2]", [["-q^-2", _Z, _Z, _Z, "[3]", _Z, _Z, _Z, _Z],
                       [_Z, "-q^-2", _Z, "1", "q^2+q^-2", _Z, _Z, _Z, _Z],
                       [_Z, _Z, "-q^-2", _Z, _Z, "-1", _Z, _Z, _Z],
                       ["-q^2-q^-2", "[3]", _Z, "q^2", _Z, _Z, _Z, _Z, _Z],
                       ["1", _Z, _Z, _Z, "q^2", _Z, _Z, _Z, _Z],
                       [_Z, _Z, "-[3]", _Z, _Z, "q^2", _Z, _Z, _Z],
                       [_Z, _Z, _Z, _Z, _Z, _Z, _DG2, _Z, _Z],
                       [_Z, _Z, _Z, _Z, _Z, _Z, _Z, _DG2, _Z],
                       [_Z, _Z, _Z, _Z, _Z, _Z, _Z, _Z, _DG2]]),
            ("1/[3]", [[_DG3, _Z, _Z, _Z, _Z, _Z, _Z, _Z, _Z],
                       [_Z, _DG3, _Z, _Z, _Z, _Z, _Z, _Z, _Z],
                       [_Z, _Z, _DG3, _Z, _Z, _Z, _Z, _Z, _Z],
                       [_Z, _Z, _Z, "-q^-3", _Z, _Z, "-[2]", _Z, _Z],
                       [_Z, _Z, _Z, _Z, "-q^-3", _Z, _Z, _Z, "[4]"],
                       [_Z, _Z, _Z, _Z, _Z, "-q^-3", _Z, "[2]", "q^3+q^-3"],
                       [_Z, _Z, _Z, "-[4]", _Z, _Z, "q^3", _Z, _Z],
                       [_Z, _Z, _Z, _Z, "-q^3-q^-3", "[4]", _Z, "q^3", _Z],
                       [_Z, _Z, _Z, _Z, "[2]", _Z, _Z, _Z, "q^3"]]),
        ],
        "subspaces": [
            [{(1, 2): "1"}, {(2, 1): "[3]"}, {(3, 1): "-[3]*(q^2+q^-2)"}],
            [{(1, 1): "1", (1, 2): "1"}, {(2, 1): "1", (2, 2): "1"},
             {(3, 1): "-(q^2+q^-2)", (3, 2): "-(q^3+q^-3)/[2]", (3, 3): "1"}],
            [{(1, 3): "1"}, {(2, 3): "-[3]"}, {(3, 2): "-[3]*(q^2+q^-2)"}],
        ],
    },
    "211x31": {
        "shapes": ("[[2,1,1]]", "[[3,1]]"),
        "right_basis": ["[[[1,3,4],[2]]]", "[[[1,2,4],[3]]]", "[[[1,2,3],[4]]]"],
        "target": REP211,
        "sigma": [
            ("1", [["q" if (i == j and i < 3) else ("-q^-1" if i == j else _Z) for j in range(9)] for i in range(9)]),
            ("1/[2]", [["-q^-2", _Z, _Z, "q^2+q^-2", "1", _Z, _Z, _Z, _Z],
                       [_Z, "-q^-2", _Z, "[3]", _Z, _Z, _Z, _Z, _Z],
                       [_Z, _Z, "-q^-2", _Z, _Z, "[3]", _Z, _Z, _Z],
                       [_Z, "1", _Z, "q^2", _Z, _Z, _Z, _Z, _Z],
                       ["[3]", "-q^2-q^-2", _Z, _Z, "q^2", _Z, _Z, _Z, _Z],
                       [_Z, _Z, "1", _Z, _Z, "q^2", _Z, _Z, _Z],
                       [_Z, _Z, _Z, _Z, _Z, _Z, _DG2, _Z, _Z],
                       [_Z, _Z, _Z, _Z, _Z, _Z, _Z, _DG2, _Z],
                       [_Z, _Z, _Z, _Z, _Z, _Z, _Z, _Z, _DG2]]),
            ("1/[3]", [[_DG3, _Z, _Z, _Z, _Z, _Z, _Z, _Z, _Z],
                       [_Z, _DG3, _Z, _Z, _Z, _Z, _Z, _Z, _Z],
                       [_Z, _Z, _DG3, _Z, _Z, _Z, _Z, _Z, _Z],
                       [_Z, _Z, _Z, "-q^-3", _Z, _Z, "[4]", _Z, _Z],
                       [_Z, _Z, _Z, _Z, "-q^-3", _Z, _Z, "q^3+q^-3", "[2]"],
                       [_Z, _Z, _Z, _Z, _Z, "-q^-3", _Z, "[4]", _Z],
                       [_Z, _Z, _Z, "[2]", _Z, _Z, "q^3", _Z, _Z],
                       [_Z, _Z, _Z, _Z, _Z, "[2]", _Z, "q^3", _Z],
                       [_Z, _Z, _Z, _Z, "[4]", "-q^3-q^-3", _Z, _Z, "q^3"]]),
        ],
        "subspaces": [
            [{(1, 1): "1"}, {(2, 2): "[3]"}, {(3, 3): "[3]*(q^2+q^-2)"}],
            [{(1, 1): "1", (1, 2): "1"}, {(2, 1): "1", (2, 2): "1"}, {(3, 1): "1", (3, 3): "q^2+q^-2"}],
            [{(1, 3): "1"}, {(2, 3): "1"}, {(3, 2): "1", (3, 3): "-(q^3+q^-3)/[2]"}],
        ],
    },
}

# Traces of sigma_1 sigma_3 in one-component representations of H(1,1,4)
TRACES_S1S3 = {
    "[[2,1,1]]": "-2+q^-2",
    "[[2,2]]": "q^2+q^-2",
    "[[2,2]]+[[1,1,1,1]]": "q^2+2*q^-2",
}


def tableaux(texts) -> list:
    return [StandardMTableau.parse(t) for t in texts]


def one_component_matrices(data: dict) -> list:
    return [dense(rows, 1, pre) for pre, rows in data["sigma"]]
