"""Published matrices, Gram diagonals, tensor tables and traces, entry by entry."""

import pytest

from cyclohecke import reference as ref
from cyclohecke.combinatorics import MPartition, standard_tableaux
from cyclohecke.forms import gram_matrix
from cyclohecke.repn import build_representation, word_trace
from cyclohecke.smash import build_tensor_module, subspace_action


@pytest.mark.parametrize("shape_text", list(ref.TWO_COMPONENT))
def test_two_component_matrices(shape_text):
    data = ref.TWO_COMPONENT[shape_text]
    rep = build_representation(MPartition.parse(shape_text))
    assert [t.to_text() for t in rep.basis] == [t.to_text() for t in ref.two_component_basis(shape_text)]
    for i, rows in enumerate(data["sigma"], start=1):
        assert rep.sigma(i).first_difference(ref.dense(rows, 2)) is None, f"sigma{i}"
    assert rep.tau.equals(ref.diag(data["tau"], 2))


@pytest.mark.parametrize("shape_text", list(ref.TWO_COMPONENT))
def test_two_component_gram(shape_text):
    G = gram_matrix(MPartition.parse(shape_text))
    want = [ref.expr(x, 2) for x in ref.TWO_COMPONENT[shape_text]["gram"]]
    assert G.entries == want


@pytest.mark.parametrize("key", list(ref.MISPRINTS))
def test_misprinted_entry_differs_from_formula(key):
    shape_text, gen, r, c = key
    entry = build_representation(MPartition.parse(shape_text)).sigma(gen)[r - 1, c - 1]
    assert entry != ref.expr(ref.MISPRINTS[key], 2)
    # the corrected text in the table agrees with the construction
    assert entry == ref.dense(ref.TWO_COMPONENT[shape_text]["sigma"][gen - 1], 2)[r - 1, c - 1]


@pytest.mark.parametrize("data", [ref.REP21, ref.REP211], ids=["21", "211"])
def test_one_component_tables(data):
    basis = ref.tableaux(data["basis"])
    rep = build_representation(basis[0].shape)
    assert rep.basis == basis
    for i, M in enumerate(ref.one_component_matrices(data), start=1):
        assert rep.sigma(i).equals(M)


@pytest.mark.parametrize("case", list(ref.TENSOR_CASES))
def test_tensor_tables(case):
    data = ref.TENSOR_CASES[case]
    shapes = [MPartition.parse(s) for s in data["shapes"]]
    mod = build_tensor_module(shapes)
    left = standard_tableaux(shapes[0])
    right = ref.tableaux(data["right_basis"])
    perm = [mod.index((x, y)) for x in left for y in right]
    for i, (pre, rows) in enumerate(data["sigma"], start=1):
        assert mod.sigma(i).submatrix(perm).equals(ref.dense(rows, 1, pre)), f"sigma{i}"
    target = ref.one_component_matrices(data["target"])
    total = 0
    for sub in data["subspaces"]:
        vecs = [{mod.index((left[i - 1], right[j - 1])): ref.expr(x, 1) for (i, j), x in v.items()} for v in sub]
        total += len(vecs)
        act = subspace_action(mod, vecs)
        assert act is not None
        for a, t in zip(act[1:], target):
            assert a.equals(t)
    assert total == mod.dim


def test_three_one_basis_is_reversed():
    right = ref.tableaux(ref.TENSOR_CASES["211x31"]["right_basis"])
    assert right == list(reversed(standard_tableaux(MPartition.of((3, 1)))))


def test_sigma1_sigma3_matrix():
    rep = build_representation(MPartition.of((2, 1, 1)))
    pre, rows = ref.SIGMA1_SIGMA3_211
    assert (rep.sigma(1) @ rep.sigma(3)).equals(ref.dense(rows, 1, pre))
    assert word_trace(rep, "sigma1 sigma3") == ref.expr(ref.TRACES_S1S3["[[2,1,1]]"], 1)
