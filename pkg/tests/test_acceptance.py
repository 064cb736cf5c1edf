"""Acceptance criteria, one test each, with wall-clock limits.

Run ``python tests/test_acceptance.py`` for a one-line-per-criterion report, or
let pytest collect the same checks.
"""

import sys
import time
from math import factorial

import pytest

from cyclohecke import reference as ref
from cyclohecke.combinatorics import (
    MPartition, dim_mpartition, is_content_string, mpartitions, standard_tableaux, string_to_tableau,
)
from cyclohecke.forms import gram_matrix, verify_invariance
from cyclohecke.matrix import matrix_rank
from cyclohecke.repn import (
    build_representation, commutant_dimension, direct_sum, idempotent, verify_baxter_identities,
    verify_defining_relations, verify_jm_spectrum, word_trace,
)
from cyclohecke.scalar import ParamSpec
from cyclohecke.suites import task_decompose, task_subspaces

SPEC = {1: ParamSpec(2, (1,)), 2: ParamSpec(2, (1, 3)), 3: ParamSpec(2, (1, 3, 5))}


def shapes_upto(m, max_n, min_n=1):
    return [lam for n in range(min_n, max_n + 1) for lam in mpartitions(m, n)]


def golden_matrices():
    for shape_text, data in ref.TWO_COMPONENT.items():
        rep = build_representation(MPartition.parse(shape_text))
        for i, rows in enumerate(data["sigma"], start=1):
            d = rep.sigma(i).first_difference(ref.dense(rows, 2))
            assert d is None, f"{shape_text} sigma{i} differs at {d}"
        assert rep.tau.equals(ref.diag(data["tau"], 2)), f"{shape_text} tau"


def golden_gram():
    for shape_text, data in ref.TWO_COMPONENT.items():
        G = gram_matrix(MPartition.parse(shape_text))
        assert G.entries == [ref.expr(x, 2) for x in data["gram"]], shape_text


def relations():
    start = time.perf_counter()
    for lam in shapes_upto(1, 4) + shapes_upto(2, 4):
        r = verify_defining_relations(build_representation(lam))
        assert r, f"{lam}: {r}"
    symbolic = time.perf_counter() - start
    assert symbolic < 120, f"symbolic part took {symbolic:.1f}s, limit 120s"
    start = time.perf_counter()
    for m in (1, 2, 3):
        for lam in shapes_upto(m, 6):
            r = verify_defining_relations(build_representation(lam, SPEC[m]))
            assert r, f"{lam} at {SPEC[m]}: {r}"
    numeric = time.perf_counter() - start
    assert numeric < 60, f"numeric part took {numeric:.1f}s, limit 60s"


def dimension_identity():
    for m in range(1, 5):
        for n in range(0, 7):
            total = sum(dim_mpartition(lam) ** 2 for lam in mpartitions(m, n))
            assert total == factorial(n) * m ** n, (m, n, total)
    assert sum(dim_mpartition(x) ** 2 for x in mpartitions(2, 2)) == 8
    assert sum(dim_mpartition(x) ** 2 for x in mpartitions(3, 4)) == 1944


def spectrum_bijection():
    for m in (1, 2, 3):
        for n in range(1, 7):
            seen = set()
            for lam in mpartitions(m, n):
                for t in standard_tableaux(lam):
                    s = t.content_string()
                    assert is_content_string(s, m), t
                    assert string_to_tableau(s, m) == t, t
                    assert s not in seen, t
                    seen.add(s)


def jm_diagonal():
    for lam in shapes_upto(1, 4) + shapes_upto(2, 4):
        r = verify_jm_spectrum(build_representation(lam))
        assert r, f"{lam}: {r}"


def invariance():
    for lam in shapes_upto(1, 4) + shapes_upto(2, 4):
        rep = build_representation(lam)
        G = gram_matrix(lam)
        for kind in ("bilinear_Sminus", "omega_S"):
            r = verify_invariance(rep, G, kind)
            assert r, f"{lam} {kind}: {r}"


def baxter():
    for lam in shapes_upto(1, 4, 3) + shapes_upto(2, 4, 3):
        r = verify_baxter_identities(build_representation(lam))
        assert r, f"{lam}: {r}"


def idempotents():
    for n in (1, 2, 3):
        reps = {lam: build_representation(lam, SPEC[2]) for lam in mpartitions(2, n)}
        for lam, rep in reps.items():
            total = rep.identity().scale(rep.field.zero)
            es = {t: idempotent(t, rep) for lam2 in reps for t in standard_tableaux(lam2)}
            for t, e in es.items():
                if t.shape == lam:
                    assert matrix_rank(e) == 1, t
                    total = total + e
                else:
                    assert matrix_rank(e) == 0, (t, lam)
            assert total.equals(rep.identity()), lam
            own = [es[t] for t in rep.basis]
            for i, a in enumerate(own):
                for j, b in enumerate(own):
                    prod = a @ b
                    assert prod.equals(a) if i == j else prod.is_zero(), (lam, i, j)


def tensor_decomposition():
    for m in (1, 2):
        for n in (1, 2, 3):
            for a in mpartitions(m, n):
                for b in mpartitions(m, n):
                    checks = task_decompose((a.to_text(), b.to_text()), (SPEC[m].q, SPEC[m].v))
                    assert all(c.ok for c in checks), [c.line() for c in checks if not c.ok]
    for b in mpartitions(1, 4):
        checks = task_decompose(("[[2,1,1]]", b.to_text()), (2, (1,)))
        assert all(c.ok for c in checks), [c.line() for c in checks if not c.ok]
    for case in ref.TENSOR_CASES:
        checks = task_subspaces(case)
        assert all(c.ok for c in checks), [c.line() for c in checks if not c.ok]


def traces():
    r211 = build_representation(MPartition.of((2, 1, 1)))
    r22 = build_representation(MPartition.of((2, 2)))
    r1111 = build_representation(MPartition.of((1, 1, 1, 1)))
    assert word_trace(r211, "sigma1 sigma3") == ref.expr("-2 + q^-2", 1)
    assert word_trace(r22, "sigma1 sigma3") == ref.expr("q^2 + q^-2", 1)
    assert word_trace(direct_sum(r22, r1111), "sigma1 sigma3") == ref.expr("q^2 + 2*q^-2", 1)


def irreducibility():
    for lam in shapes_upto(2, 4):
        d = commutant_dimension(build_representation(lam, SPEC[2]))
        assert d == 1, (lam, d)


CRITERIA = [
    (1, "golden representation matrices", golden_matrices, 5),
    (2, "golden Gram diagonals", golden_gram, 1),
    (3, "defining relations (symbolic < 120s, numeric < 60s)", relations, 180),
    (4, "sum of squared dimensions", dimension_identity, 10),
    (5, "content strings round trip and are distinct", spectrum_bijection, 30),
    (6, "JM elements diagonal on content strings", jm_diagonal, 60),
    (7, "invariance of the Gram form", invariance, 60),
    (8, "Baxterized identities", baxter, 60),
    (9, "idempotents", idempotents, 30),
    (10, "tensor decompositions and invariant subspaces", tensor_decomposition, 120),
    (11, "traces of sigma1 sigma3", traces, 1),
    (12, "commutant dimension one", irreducibility, 60),
]


def _run(fn, limit):
    start = time.perf_counter()
    error = None
    try:
        fn()
    except AssertionError as exc:
        error = f"assertion failed: {exc}"
    except Exception as exc:  # a crash counts as a failed criterion
        error = f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if error is None and elapsed > limit:
        error = f"took {elapsed:.2f}s, limit {limit}s"
    return error, elapsed


@pytest.mark.parametrize("number,title,fn,limit", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, fn, limit):
    error, elapsed = _run(fn, limit)
    status = "PASS" if error is None else "FAIL"
    print(f"criterion {number:2d} {status} {elapsed:7.2f}s (limit {limit}s) {title}" + (f": {error}" if error else ""))
    assert error is None, error


def main() -> int:
    failed = 0
    for number, title, fn, limit in CRITERIA:
        error, elapsed = _run(fn, limit)
        status = "PASS" if error is None else "FAIL"
        failed += error is not None
        print(f"criterion {number:2d} {status} {elapsed:7.2f}s (limit {limit}s) {title}" + (f": {error}" if error else ""),
              flush=True)
    print(f"{len(CRITERIA) - failed} of {len(CRITERIA)} criteria passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
