import pytest

from cyclohecke.combinatorics import (
    MPartition, StandardMTableau, apply_adjacent_transposition, mpartitions, standard_tableaux,
)
from cyclohecke.matrix import Matrix
from cyclohecke.repn import (
    Field, Module, baxter_f, baxterized_sigma, build_representation, commutant_dimension, direct_sum,
    h2_affine_irreps, idempotent, intertwiner_matrices, jm_matrices, parse_word, restriction,
    specialize_module, vacuum_constant, verify_baxter_identities, verify_defining_relations,
    verify_h2_relations, verify_idempotents, verify_intertwiners, verify_jm_spectrum,
    verify_matrix_unit_identity, verify_restriction, verify_vacuum_isomorphism, word_matrix, word_trace,
)
from cyclohecke.scalar import GenericityError, ParamSpec, parse, q_number

SPEC2 = ParamSpec(2, (1, 3))
F2 = Field(2)
Q, QI, V1, V2 = F2.q, F2.qinv, F2.v(1), F2.v(2)


def shape(text):
    return MPartition.parse(text)


def M(rows):
    return Matrix.from_dense(rows, F2.zero, F2.one)


def test_two_node_representation():
    rep = build_representation(shape("[[1],[1]]"))
    k = Q - QI
    sigma = M([[-(k * V2 / (V1 - V2)), (Q * V1 - QI * V2) / (V1 - V2)],
               [(Q * V2 - QI * V1) / (V2 - V1), -(k * V1 / (V2 - V1))]])
    assert rep.sigma(1).equals(sigma)
    assert rep.tau.equals(F2.diagonal([V1, V2]))


def test_hecke_21():
    rep = build_representation(shape("[[2,1]]"))
    f = rep.field
    two, three = f.scalar(q_number(2, 1)), f.scalar(q_number(3, 1))
    assert rep.sigma(1).equals(f.diagonal([f.q, -f.qinv]))
    want = Matrix.from_dense([[-f.qinv ** 2, three], [f.one, f.q ** 2]], f.zero, f.one).scale(f.one / two)
    assert rep.sigma(2).equals(want)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_one_row_is_one_dimensional(n):
    rep = build_representation(MPartition.of((n,), ()))
    assert rep.dim == 1
    assert rep.tau.equals(F2.diagonal([V1]))
    assert all(s.equals(F2.diagonal([Q])) for s in rep.sigmas)


def test_non_generic_spec_rejected():
    with pytest.raises(GenericityError):
        build_representation(shape("[[1],[1]]"), ParamSpec(2, (1, 4)))


@pytest.mark.parametrize("lam", mpartitions(2, 3) + mpartitions(1, 4), ids=str)
def test_relations_symbolic(lam):
    assert verify_defining_relations(build_representation(lam))


@pytest.mark.parametrize("lam", mpartitions(3, 4), ids=str)
def test_relations_numeric(lam):
    assert verify_defining_relations(build_representation(lam, ParamSpec(2, (1, 3, 5))))


def test_one_dimensional_quadratic():
    m = Module(F2, 2, 1, F2.diagonal([V1]), [F2.diagonal([Q])])
    assert verify_defining_relations(m)


def test_corrupted_matrix_is_reported():
    rep = build_representation(shape("[[2,1],[1]]"))
    s = rep.sigmas[1].copy()
    i, j = next((i, j) for i, r in enumerate(s.rows) for j in r if i != j)
    s[i, j] = -s[i, j]
    rep.sigmas[1] = s
    report = verify_defining_relations(rep)
    assert not report
    assert report.relation in ("braid", "quadratic")
    assert report.entry is not None


def test_jm_two_nodes():
    rep = build_representation(shape("[[1],[1]]"))
    J = jm_matrices(rep)
    assert J[0].equals(rep.tau)
    assert J[1].equals(F2.diagonal([V2, V1]))


def test_jm_example_tableau():
    t = StandardMTableau.from_rows([[[1, 2, 4], [6, 9], [7]], [[3, 8, 10], [5]]])
    rep = build_representation(t.shape, ParamSpec(2, (1, 3)))
    j = rep.index(t)
    f = rep.field
    assert [J[j, j] for J in jm_matrices(rep)] == [f.content(c) for c in t.content_string()]
    assert verify_jm_spectrum(rep)


@pytest.mark.parametrize("lam", mpartitions(2, 3), ids=str)
def test_jm_spectrum_and_commutation(lam):
    rep = build_representation(lam)
    assert verify_jm_spectrum(rep)
    J = jm_matrices(rep)
    for i in range(1, lam.size + 1):
        for k in range(1, lam.size):
            if k > i or k < i - 1:
                assert (J[i - 1] @ rep.sigma(k)).equals(rep.sigma(k) @ J[i - 1])


def test_baxter_basic():
    rep = build_representation(shape("[[1],[1]]"))
    assert baxterized_sigma(rep, 1, V1, F2.zero).equals(rep.sigma(1))
    with pytest.raises(ValueError):
        baxterized_sigma(rep, 1, V1, V1)
    a, b = V1, V2
    lhs = baxterized_sigma(rep, 1, a, b) @ baxterized_sigma(rep, 1, b, a)
    assert lhs.equals(F2.identity(2).scale(baxter_f(F2, a, b) * baxter_f(F2, b, a)))


@pytest.mark.parametrize("lam", mpartitions(2, 3) + mpartitions(1, 4), ids=str)
def test_baxter_identities(lam):
    assert verify_baxter_identities(build_representation(lam))


def test_baxter_unitarity_implies_quadratic():
    # expanding sigma(a,b) sigma(b,a) = f(a,b) f(b,a) gives the quadratic relation back
    rep = build_representation(shape("[[2],[1]]"))
    f = rep.field
    a, b = f.v(1), f.v(2)
    s = rep.sigma(1)
    k = f.q - f.qinv
    lhs = (s @ s).add_scalar(-f.one) - s.scale(k)
    assert lhs.is_zero()
    assert verify_baxter_identities(rep, (a, b, a * f.q ** 4))


def test_intertwiners():
    rep = build_representation(shape("[[1],[1]]"))
    U = intertwiner_matrices(rep)[0]
    assert U[1, 0] == QI * V1 - Q * V2 and U[0, 0] == F2.zero
    row = build_representation(shape("[[2],[]]"))
    assert intertwiner_matrices(row)[0].is_zero()
    for lam in mpartitions(2, 3):
        rep = build_representation(lam)
        assert verify_intertwiners(rep)
        J = jm_matrices(rep)
        for i, U in enumerate(intertwiner_matrices(rep), start=1):
            assert (J[i] @ U).equals(U @ J[i - 1])


def test_restriction_blocks():
    rep = build_representation(shape("[[1,1],[2]]"))
    blocks = restriction(rep)
    assert sorted((b.shape.to_text(), b.module.dim) for b in blocks) == [("[[1,1],[1]]", 3), ("[[1],[2]]", 3)]
    assert verify_restriction(rep)
    one = restriction(build_representation(shape("[[1],[]]")))
    assert len(one) == 1 and one[0].module.dim == 1


def test_idempotent_first_tableau():
    rep = build_representation(shape("[[1],[1]]"))
    e = idempotent(rep.basis[0], rep)
    assert e.equals(F2.diagonal([F2.one, F2.zero]))


def test_idempotent_vanishes_off_shape():
    rep = build_representation(shape("[[2],[]]"))
    for t in standard_tableaux(shape("[[1],[1]]")):
        assert idempotent(t, rep).is_zero()


@pytest.mark.parametrize("lam", [x for n in (1, 2, 3) for x in mpartitions(2, n)], ids=str)
def test_idempotents_and_matrix_units(lam):
    rep = build_representation(lam)
    assert verify_idempotents(rep)
    for t in rep.basis:
        for i in range(1, lam.size):
            if apply_adjacent_transposition(t, i) is None:
                with pytest.raises(ValueError):
                    verify_matrix_unit_identity(rep, i, t)
            else:
                assert verify_matrix_unit_identity(rep, i, t)


def test_matrix_unit_off_diagonal_entry():
    rep = build_representation(shape("[[1],[1]]"))
    t = rep.basis[0]
    c1, c2 = V1, V2
    lhs = rep.sigma(1).add_scalar((Q - QI) * c2 / (c1 - c2)) @ idempotent(t, rep)
    B = (Q * V2 - QI * V1) / (V2 - V1)
    assert lhs.equals(M([[F2.zero, F2.zero], [B, F2.zero]]))


def test_h2_one_dimensional():
    a = V1
    rep = h2_affine_irreps(F2, a)
    assert rep.Y[0, 0] == Q ** 2 * a and rep.sigma[0, 0] == Q
    rep = h2_affine_irreps(F2, a, eps=-1)
    assert rep.sigma[0, 0] == -QI
    assert verify_h2_relations(F2, rep)


def test_h2_two_dimensional_matches_seminormal_block():
    rep = h2_affine_irreps(F2, V1, V2)
    assert verify_h2_relations(F2, rep)
    assert rep.sigma[0, 0] == (Q - QI) * V2 / (V2 - V1)
    sigma = build_representation(shape("[[1],[1]]")).sigma(1)
    assert rep.sigma[0, 0] == sigma[0, 0] and rep.sigma[1, 1] == sigma[1, 1]
    assert rep.sigma[0, 1] * rep.sigma[1, 0] == sigma[0, 1] * sigma[1, 0]
    for bad in (V1, V1 * Q ** 2, V1 * QI ** 2):
        with pytest.raises(ValueError):
            h2_affine_irreps(F2, V1, bad)


def test_commutant_dimensions():
    a = build_representation(shape("[[1],[1]]"), SPEC2)
    assert commutant_dimension(a) == 1
    assert commutant_dimension(direct_sum(a, a)) == 4
    assert commutant_dimension(build_representation(shape("[[1,1],[2]]"), SPEC2)) == 1
    b = build_representation(shape("[[2],[]]"), SPEC2)
    assert commutant_dimension(direct_sum(a, build_representation(shape("[[],[2]]"), SPEC2))) == 2
    assert commutant_dimension(build_representation(shape("[[1],[1]]")), SPEC2) == 1
    with pytest.raises(ValueError):
        commutant_dimension(build_representation(shape("[[1],[1]]")))
    assert b.dim == 1


def test_specialize_module_matches_numeric_build():
    lam = shape("[[2,1],[1]]")
    a = specialize_module(build_representation(lam), SPEC2)
    b = build_representation(lam, SPEC2)
    assert all(x.equals(y) for (_, x), (_, y) in zip(a.generators(), b.generators()))


def test_word_traces():
    rep = build_representation(MPartition.of((2, 1, 1)))
    f = rep.field
    assert word_trace(rep, "sigma1 sigma3") == parse("-2 + q^-2", 1)
    assert word_trace(rep, []) == f.scalar(3)
    rep22 = build_representation(MPartition.of((2, 2)))
    assert word_trace(rep22, "sigma1 sigma3") == parse("q^2 + q^-2", 1)
    s = rep.sigma(2)
    assert (s @ word_matrix(rep, "sigma2^-1")).equals(rep.identity())
    with pytest.raises(ValueError):
        word_trace(rep, "sigma4")


def test_parse_word():
    assert parse_word("sigma1 sigma3^-1 tau") == [(1, 1), (3, -1), (0, 1)]
    with pytest.raises(ValueError):
        parse_word("sigma1 x")


def test_vacuum_constant_two_nodes():
    t = standard_tableaux(shape("[[1],[1]]"))[0]
    assert vacuum_constant(F2, t) == Q * V1 - QI * V2


@pytest.mark.parametrize("lam", mpartitions(2, 3) + mpartitions(1, 4), ids=str)
def test_vacuum_conventions_are_isomorphic(lam):
    assert verify_vacuum_isomorphism(lam)
    assert verify_defining_relations(build_representation(lam, vacuum="-q^-1"))


@pytest.mark.parametrize("lam", mpartitions(2, 4) + mpartitions(3, 3), ids=str)
def test_vacuum_conventions_numeric(lam):
    assert verify_vacuum_isomorphism(lam, ParamSpec(2, (1, 3, 5)[:lam.m]))


def test_single_index_vacuum_product_is_not_enough():
    # the product over standard adjacent swaps only does not conjugate V to the other vacuum
    lam = MPartition.of((2, 1, 1))
    a = build_representation(lam, ParamSpec(2, (1,)))
    b = build_representation(lam, ParamSpec(2, (1,)), "-q^-1")
    f = a.field
    cs = []
    for t in a.basis:
        c = f.one
        for i in range(1, lam.size):
            if apply_adjacent_transposition(t, i) is not None:
                c *= f.q * f.content(t.content(i)) - f.qinv * f.content(t.content(i + 1))
        cs.append(c)
    D, Di = f.diagonal(cs), f.diagonal([1 / c for c in cs])
    assert not all((Di @ x @ D).equals(y) for (_, x), (_, y) in zip(a.generators(), b.generators()))
