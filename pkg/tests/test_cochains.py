import random
from fractions import Fraction

import pytest

from genusone.cochains import (Cochain, DualVector, cochain_differential, cup,
                               splitting_map, verify_cup_primitive,
                               verify_d_after_a)


def duals(rank):
    return [DualVector([1 if j == i else 0 for j in range(rank)])
            for i in range(rank)]


def test_dual_vector_pairing():
    phi = DualVector([2, -3])
    assert phi((1, 1)) == Fraction(-1)
    assert phi((0, 2)) == Fraction(-6)
    assert phi.rank == 2
    with pytest.raises(ValueError):
        phi((1, 2, 3))


def test_cochain_call_validation():
    f = Cochain(2, 2, lambda a, b: a[0] * b[1])
    assert f((1, 0), (0, 3)) == 3
    with pytest.raises(ValueError):
        f((1, 0))
    with pytest.raises(ValueError):
        f((1, 0, 0), (0, 3, 0))


def test_differential_on_a_square():
    # f(v) = v_x^2 has df(a, b) = -2 a_x b_x
    f = Cochain(1, 2, lambda v: Fraction(v[0]) ** 2)
    df = cochain_differential(f)
    assert df.arity == 2
    rng = random.Random(3)
    for _ in range(25):
        a, b = [tuple(rng.randint(-9, 9) for _ in range(2)) for _ in range(2)]
        assert df(a, b) == -2 * a[0] * b[0]


def test_differential_squares_to_zero():
    # cubic evaluator, so neither d nor d o d is trivially zero termwise
    f = Cochain(1, 3, lambda v: Fraction(v[0] ** 3 + 2 * v[1] * v[2]))
    ddf = cochain_differential(cochain_differential(f))
    rng = random.Random(4)
    for _ in range(40):
        vecs = [tuple(rng.randint(-8, 8) for _ in range(3)) for _ in range(3)]
        assert ddf(*vecs) == 0
    g = Cochain(2, 2, lambda a, b: Fraction(a[0] * a[1] * b[0]))
    ddg = cochain_differential(cochain_differential(g))
    for _ in range(40):
        vecs = [tuple(rng.randint(-8, 8) for _ in range(2)) for _ in range(4)]
        assert ddg(*vecs) == 0


def test_splitting_map_basis_normalization():
    e1, e2 = duals(2)
    a2 = splitting_map([e1, e2])
    assert a2.arity == 2
    assert a2((1, 0), (0, 1)) == Fraction(1, 2)
    assert a2((0, 1), (1, 0)) == Fraction(-1, 2)
    assert a2((1, 0), (1, 0)) == 0
    e = duals(3)
    a3 = splitting_map(e)
    assert a3((1, 0, 0), (0, 1, 0), (0, 0, 1)) == Fraction(1, 6)


def test_splitting_map_is_alternating_in_the_forms():
    rng = random.Random(5)
    phis = [DualVector([rng.randint(-4, 4) for _ in range(3)])
            for _ in range(2)]
    plain = splitting_map(phis)
    swapped = splitting_map(phis[::-1])
    for _ in range(20):
        vecs = [tuple(rng.randint(-6, 6) for _ in range(3)) for _ in range(2)]
        assert plain(*vecs) == -swapped(*vecs)


def test_splitting_map_validation():
    e1, e2 = duals(2)
    with pytest.raises(ValueError):
        splitting_map([])
    with pytest.raises(ValueError):
        splitting_map([e1, e2, e2])
    with pytest.raises(ValueError):
        splitting_map([e1, DualVector([1, 0, 0])])


def test_d_after_a_vanishes():
    for k in (1, 2, 3):
        for d in range(k, 4):
            report = verify_d_after_a(k, d, samples=60, seed=1)
            assert report.passed, (k, d)
            assert report.samples == 60
    with pytest.raises(ValueError):
        verify_d_after_a(0, 1)
    with pytest.raises(ValueError):
        verify_d_after_a(2, 1)
    with pytest.raises(ValueError):
        verify_d_after_a(1, 4)


def test_cup_product_primitive():
    e1, e2 = duals(2)
    report = verify_cup_primitive(e1, e2, samples=80, seed=2)
    assert report.passed
    cupped = cup(e1, e2)
    assert cupped.arity == 2
    assert cupped((1, 0), (0, 1)) == 1
    assert cupped((0, 1), (1, 0)) == 0
    with pytest.raises(ValueError):
        verify_cup_primitive(DualVector([1]), DualVector([2]))
    with pytest.raises(ValueError):
        cup(e1, DualVector([1, 0, 0]))
