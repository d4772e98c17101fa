import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dessins import ratmat
from dessins.grassmann import component_index, lattice_equal, standard_lattice
from dessins.laurent import Laurent, LaurentMatrix, X
from dessins.lusztig import (
    CyclicQuiverRep, NotNilpotent, big_matrix, chain_product, check_equivariance,
    embedding_index, is_nilpotent_matrix, is_nilpotent_rep, lambda_depth, lambda_lattice,
    lambda_lattices, partial_flag_type, phi_nilpotent, rational_to_laurent,
)
from dessins.order import hereditary_order
from oracles import matmul
from rep_gen import random_gs, random_rep

REP = CyclicQuiverRep((1, 1), ([[1]], [[0]]))


def test_phi_fixtures():
    assert phi_nilpotent([[0, 0], [0, 0]]).matrix == LaurentMatrix.identity(2).scale(X)
    assert phi_nilpotent([[0, 1], [0, 0]]).matrix == LaurentMatrix([[X, 1], [0, X]])
    with pytest.raises(NotNilpotent):
        phi_nilpotent([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        phi_nilpotent([[0, 1]])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_phi_of_zero(n):
    zero = [[0] * n for _ in range(n)]
    assert lattice_equal(phi_nilpotent(zero), standard_lattice(n).scale(X ** (n - 1)))
    assert component_index(phi_nilpotent(zero)) == n * (n - 1)


def test_equivariance_fixtures():
    assert check_equivariance([[1, 0], [0, 1]], [[0, 1], [0, 0]])
    assert check_equivariance([[1, 1], [0, 1]], [[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        check_equivariance([[1, 1], [1, 1]], [[0, 1], [0, 0]])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_random_equivariance(n, seed):
    rng = random.Random(seed)
    assert check_equivariance(ratmat.random_invertible(n, rng), ratmat.random_nilpotent(n, rng))


@pytest.mark.parametrize("partition", [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (4,), (2, 2), (3, 1)])
def test_component_index_constant_on_jordan_type(partition):
    rng = random.Random(sum(partition) * 31 + len(partition))
    j = ratmat.jordan_nilpotent(partition)
    n = len(j)
    seen = set()
    for _ in range(5):
        g = ratmat.random_invertible(n, rng)
        conj = ratmat.matmul(ratmat.matmul(g, j), ratmat.inverse(g))
        seen.add(component_index(phi_nilpotent(conj)))
    assert seen == {n * (n - 1)}


def test_rep_fixtures():
    assert is_nilpotent_rep(CyclicQuiverRep.zero([2, 1, 0]))
    assert is_nilpotent_rep(REP)
    assert not is_nilpotent_rep(CyclicQuiverRep((1, 1), ([[1]], [[1]])))
    with pytest.raises(ValueError):
        CyclicQuiverRep((1, 2), ([[1]], [[0]]))
    with pytest.raises(ValueError):
        CyclicQuiverRep((0, 0), ((), ()))
    back = CyclicQuiverRep.from_dict(json.loads(REP.to_json()))
    assert back == REP
    with pytest.raises(ValueError):
        CyclicQuiverRep.from_dict({"dims": [1]})


def test_big_matrix_fixtures():
    assert big_matrix(CyclicQuiverRep.zero([1, 2])) == LaurentMatrix.zeros(3, 3)
    a, b = Fraction(2), Fraction(3)
    m = big_matrix(CyclicQuiverRep((1, 1), ([[a]], [[b]])))
    assert m == LaurentMatrix([[0, b], [X ** -1 * a, 0]])
    # diag(1, x) conjugates this into the layout with x^-1 on the upper block
    d = LaurentMatrix([[1, 0], [0, X]])
    assert d @ m @ d.inverse() == LaurentMatrix([[0, X ** -1 * b], [a, 0]])


def test_lambda_fixtures():
    l1, l2 = lambda_lattices(REP)
    assert l1.matrix == LaurentMatrix([[1, 0], [X ** -1, 1]])
    assert l2.matrix == LaurentMatrix([[0, X], [1, 0]])
    assert embedding_index(REP) == [0, 1]
    assert lambda_depth(REP, 1) == 2 and lambda_depth(REP, 2) == 1
    zero = CyclicQuiverRep.zero([1, 1, 1])
    for j, l in enumerate(lambda_lattices(zero), 1):
        assert lattice_equal(l, standard_lattice(3, 0, j))
    with pytest.raises(NotNilpotent):
        lambda_lattice(CyclicQuiverRep((1, 1), ([[1]], [[1]])), 1)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_single_vertex_degenerates_to_phi(d):
    rng = random.Random(d)
    for _ in range(4):
        n_mat = ratmat.random_nilpotent(d, rng)
        rep = CyclicQuiverRep((d,), (n_mat,))
        assert is_nilpotent_rep(rep)
        assert lattice_equal(lambda_lattice(rep, 1).scale(X ** (d - 1)), phi_nilpotent(n_mat))


def test_partial_flag_type():
    assert partial_flag_type(3, [3]).min_val == ((0,) * 3,) * 3
    assert partial_flag_type(3, [1, 1, 1]) == hereditary_order(3)
    assert partial_flag_type(3, [2, 1]).min_val[0] == partial_flag_type(3, [2, 1]).min_val[1]
    with pytest.raises(ValueError):
        partial_flag_type(3, [1, 1])


def test_is_nilpotent_matrix_guards():
    with pytest.raises(ValueError):
        is_nilpotent_matrix(LaurentMatrix([[Laurent(0, [1], 3)]]))
    with pytest.raises(ValueError):
        is_nilpotent_matrix(LaurentMatrix([[0, 1]]))


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_nilpotency_matches_big_matrix(n, seed):
    rep = random_rep(random.Random(seed), n)
    assert is_nilpotent_rep(rep) == is_nilpotent_rep(rep, all_rotations=False)
    assert is_nilpotent_rep(rep) == is_nilpotent_matrix(big_matrix(rep))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_chain_recursion(n, seed):
    rep = random_rep(random.Random(seed), n)
    for j in range(1, n + 1):
        for k in range(0, 2 * n + 2):
            prev, nxt = chain_product(rep, j, k), chain_product(rep, j, k + 1)
            if not prev or not prev[0] or rep.dim(j - k - 1) == 0:
                # a zero-dimensional space on the way: the product is the empty map
                assert not nxt or not nxt[0] or ratmat.is_zero(nxt)
                continue
            expected = matmul(list(rep.a(j - k)), list(prev))
            assert [list(r) for r in nxt] == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10**6))
def test_lambda_is_a_lattice_and_base_change_equivariant(n, seed):
    rng = random.Random(seed)
    rep = random_rep(rng, n)
    if not is_nilpotent_rep(rep):
        return
    gs = random_gs(rng, rep)
    moved = rep.base_change(gs)
    assert is_nilpotent_rep(moved)
    total = sum(rep.dims)
    block = [[Fraction(0)] * total for _ in range(total)]
    off = 0
    for g, d in zip(gs, rep.dims):
        for p in range(d):
            for q in range(d):
                block[off + p][off + q] = g[p][q]
        off += d
    gl = rational_to_laurent(block)
    assert big_matrix(moved) == gl @ big_matrix(rep) @ gl.inverse()
    for j in range(1, n + 1):
        lam = lambda_lattice(rep, j)
        assert lam.matrix.det_ord() is not None
        assert lattice_equal(lambda_lattice(moved, j), lam.act(gl))
