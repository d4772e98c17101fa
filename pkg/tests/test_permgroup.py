import random
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from dessins.permgroup import (
    Constellation, InvalidConstellation, Overflow, Permutation, compose, cycles, inverse,
    monodromy_order, random_constellation, surface_data, validate_constellation,
)

TORUS = Constellation.from_cycles(4, [[1, 2, 3, 4]], [[1, 3], [2, 4]], [[1, 2, 3, 4]])
TRIVIAL = Constellation.from_cycles(2, [[1, 2]], [[1, 2]], [])


def pointwise(p, q):
    return [p.images[q.images[i] - 1] for i in range(p.degree)]


def test_permutation_images():
    p = Permutation.from_cycles([[1, 3, 2]], 3)
    assert p(1) == 3
    assert p.images == (3, 1, 2)


def test_compose_fixtures():
    p = Permutation.from_cycles([[1, 2, 3, 4]], 4)
    q = Permutation.from_cycles([[1, 3], [2, 4]], 4)
    assert compose(p, Permutation.identity(4)) == p
    # point-by-point oracle
    assert list(compose(p, q).images) == pointwise(p, q)
    assert compose(p, q) == Permutation.from_cycles([[1, 4, 3, 2]], 4)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_cycles_fixtures():
    assert cycles(Permutation.identity(4)) == [(1,), (2,), (3,), (4,)]
    assert cycles(Permutation.from_cycles([[3, 1], [4, 2]], 4)) == [(1, 3), (2, 4)]
    assert cycles(Permutation.from_cycles([[3, 4, 1, 2]], 4)) == [(1, 2, 3, 4)]


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation.from_cycles([[1, 2], [2, 3]], 3)


def test_validation_fixtures():
    assert validate_constellation(TRIVIAL).valid
    assert validate_constellation(TORUS).valid
    bad = Constellation(Permutation.identity(2), Permutation.identity(2), Permutation.identity(2))
    report = validate_constellation(bad)
    assert not report.alpha_involution_fpf and not report.valid


def test_surface_data_fixtures():
    sd = surface_data(TRIVIAL)
    assert (sd.vertices, sd.edges, sd.faces, sd.euler_characteristic, sd.genus) == (1, 1, 2, 2, 0)
    sd = surface_data(TORUS)
    assert (sd.vertices, sd.edges, sd.faces, sd.euler_characteristic, sd.genus) == (1, 2, 1, 0, 1)
    assert sd.ramification_degrees == (4,)


def test_surface_data_rejects_disconnected():
    c = Constellation.from_cycles(4, [[1, 2], [3, 4]], [[1, 2], [3, 4]])
    assert not validate_constellation(c).transitive
    with pytest.raises(InvalidConstellation):
        surface_data(c)


def test_monodromy_fixtures():
    assert monodromy_order(TRIVIAL) == 2
    assert monodromy_order(TORUS) == 4
    # frozen from an independent Schreier-Sims computation (sympy): a transitive S_5 on 6 points
    c = Constellation.from_cycles(6, [[1, 2, 3, 4, 5, 6]], [[1, 2], [3, 5], [4, 6]])
    assert monodromy_order(c) == 120
    assert monodromy_order(c, cap=10) == Overflow(10)


def test_json_round_trip():
    assert Constellation.from_json(TORUS.to_json()) == TORUS
    with pytest.raises(ValueError):
        Constellation.from_dict({"degree": 2, "sigma": []})


perms = st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1)).map(tuple))


@given(perms, st.data())
def test_group_laws(images, data):
    p = Permutation(images)
    n = p.degree
    q = Permutation(tuple(data.draw(st.permutations(range(1, n + 1)))))
    r = Permutation(tuple(data.draw(st.permutations(range(1, n + 1)))))
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, inverse(p)).is_identity()
    conj = compose(compose(q, p), inverse(q))
    assert sorted(map(len, cycles(conj))) == sorted(map(len, cycles(p)))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6))
def test_random_constellations(half, seed):
    c = random_constellation(2 * half, random.Random(seed))
    assert validate_constellation(c).valid
    sd = surface_data(c)
    assert sd.euler_characteristic % 2 == 0 and sd.genus >= 0
    assert len(cycles(c.alpha)) == c.degree // 2
    order = monodromy_order(c)
    if not isinstance(order, Overflow):
        assert factorial(c.degree) % order == 0 and order >= c.degree
