from collections import Counter

import pytest

from cyclohecke.combinatorics import MPartition, mpartitions, standard_tableaux
from cyclohecke.repn import Field, build_representation, jm_matrices, verify_defining_relations
from cyclohecke.scalar import ParamSpec
from cyclohecke.smash import (
    build_tensor_module, decompose, expected_decomposition, push_through, restrict_module,
    subspace_action, verify_restriction_compatibility,
)

F2 = Field(2)
Q, QI, V1, V2 = F2.q, F2.qinv, F2.v(1), F2.v(2)
SPEC1 = ParamSpec(2, (1,))
SPEC2 = ParamSpec(2, (1, 3))


def shapes(*texts):
    return [MPartition.parse(t) for t in texts]


def test_push_tau():
    t = standard_tableaux(MPartition.parse("[[1],[1]]"))[0]
    (term,) = push_through(F2, "tau", t)
    assert term.coeff == V1 and term.tableau == t and not term.residual.sigma


def test_push_sigma_row_neighbors():
    t = standard_tableaux(MPartition.parse("[[2],[]]"))[0]
    (term,) = push_through(F2, "sigma1", t)
    assert term.coeff == Q and term.tableau == t


def test_push_sigma_two_nodes():
    x1, x2 = standard_tableaux(MPartition.parse("[[1],[1]]"))
    a, b = push_through(F2, "sigma1", x1)
    k = Q - QI
    assert a.tableau == x1 and a.coeff == -(k * V2 / (V1 - V2)) and not a.residual.sigma
    assert b.tableau == x2 and b.coeff == F2.one
    assert b.residual.sigma == F2.one and b.residual.scalar == k * V1 / (V2 - V1)


def test_push_unknown_generator():
    with pytest.raises(ValueError):
        push_through(F2, "rho1", standard_tableaux(MPartition.parse("[[1],[1]]"))[0])


@pytest.mark.parametrize("lam", mpartitions(2, 3), ids=str)
def test_single_factor_is_the_representation(lam):
    mod = build_tensor_module([lam])
    rep = build_representation(lam)
    assert all(x.equals(y) for (_, x), (_, y) in zip(mod.generators(), rep.generators()))


@pytest.mark.parametrize("lam", mpartitions(2, 3), ids=str)
def test_one_row_right_factor(lam):
    row = MPartition.of((3,), ())
    mod = build_tensor_module([lam, row])
    rep = build_representation(lam)
    assert all(x.equals(y) for (_, x), (_, y) in zip(mod.generators(), rep.generators()))


def test_printed_sigma1_of_21x21():
    mod = build_tensor_module(shapes("[[2,1]]", "[[2,1]]"))
    f = mod.field
    assert mod.sigma(1).equals(f.diagonal([f.q, f.q, -f.qinv, -f.qinv]))


@pytest.mark.parametrize("pair", [(a, b) for a in mpartitions(2, 2) for b in mpartitions(2, 2)], ids=str)
def test_tensor_relations_symbolic(pair):
    assert verify_defining_relations(build_tensor_module(pair))


def test_jm_act_by_contents_of_leftmost_factor():
    mod = build_tensor_module(shapes("[[1],[1]]", "[[1],[1]]", "[[2],[]]"))
    for J, i in zip(jm_matrices(mod), range(1, 3)):
        assert J.is_diagonal()
        for j, word in enumerate(mod.basis):
            assert J[j, j] == mod.field.content(word[0].content(i))


def test_three_factor_decomposition():
    mod = build_tensor_module(shapes("[[2,1]]", "[[2,1]]", "[[1,1,1]]"), SPEC1)
    assert decompose(mod) == {MPartition.of((2, 1)): 2}


def test_decompose_examples():
    assert decompose(build_tensor_module(shapes("[[2,1]]", "[[2,1]]"), SPEC1)) == {MPartition.of((2, 1)): 2}
    assert decompose(build_tensor_module(shapes("[[2,1,1]]", "[[3,1]]"), SPEC1)) == {MPartition.of((2, 1, 1)): 3}
    lam = MPartition.parse("[[1,1],[1]]")
    row = MPartition.parse("[[3],[]]")
    assert decompose(build_tensor_module([lam, row], SPEC2)) == {lam: 1}
    with pytest.raises(ValueError):
        decompose(build_tensor_module([lam, row]))


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (2, 3)])
def test_decomposition_all_pairs(m, n):
    spec = ParamSpec(2, (1, 3)[:m])
    for a in mpartitions(m, n):
        for b in mpartitions(m, n):
            pair = (a, b)
            got = decompose(build_tensor_module(pair, spec))
            assert got == expected_decomposition(pair)
            assert sum(k * len(standard_tableaux(mu)) for mu, k in got.items()) == \
                len(standard_tableaux(a)) * len(standard_tableaux(b))


def test_restriction_compatibility():
    pair = shapes("[[2,1]]", "[[2,1]]")
    assert verify_restriction_compatibility(pair, SPEC1)
    mod = build_tensor_module(pair, SPEC1)
    assert Counter(decompose(restrict_module(mod))) == Counter({MPartition.of((2,)): 2, MPartition.of((1, 1)): 2})
    assert verify_restriction_compatibility(shapes("[[1],[1]]", "[[1],[1]]"), SPEC2)
    assert verify_restriction_compatibility(shapes("[[2,1],[1]]"), SPEC2)


def test_size_mismatch():
    with pytest.raises(ValueError):
        build_tensor_module(shapes("[[2,1]]", "[[2]]"))
    with pytest.raises(ValueError):
        build_tensor_module([])


def test_subspace_action_rejects_non_invariant_span():
    mod = build_tensor_module(shapes("[[2,1]]", "[[2,1]]"))
    one = mod.field.one
    assert subspace_action(mod, [{0: one}]) is None
    full = subspace_action(mod, [{i: one} for i in range(mod.dim)])
    assert all(a.equals(g) for a, (_, g) in zip(full, mod.generators()))
