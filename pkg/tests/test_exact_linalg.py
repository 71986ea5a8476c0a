import json
import random

import pytest

from genusone.exact_linalg import (CochainComplex, FgAbelianGroup,
                                   IntegerMatrix, cohomology_at, direct_sum,
                                   fp_rank, group_from_json, group_to_json,
                                   localize, mod_p_dims, smith_normal_form,
                                   snf_diagonal)


def random_matrix(rng, rows, cols, bound=9):
    return IntegerMatrix([[rng.randint(-bound, bound) for _ in range(cols)]
                          for _ in range(rows)])


def test_matrix_basics():
    a = IntegerMatrix([[1, 2], [3, 4]])
    b = IntegerMatrix([[0, 1], [1, 0]])
    assert (a * b).to_lists() == [[2, 1], [4, 3]]
    assert (a + b).to_lists() == [[1, 3], [4, 4]]
    assert a.transpose().to_lists() == [[1, 3], [2, 4]]
    assert a.det() == -2
    assert (a ** 0) == IntegerMatrix.identity(2)
    assert a.mod(2).to_lists() == [[1, 0], [1, 0]]


def test_snf_certificate_random():
    rng = random.Random(0)
    for _ in range(40):
        a = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        u, d, v = smith_normal_form(a)
        assert u * a * v == d
        assert abs(u.det()) == 1
        assert abs(v.det()) == 1
        diag = [d[i][i] for i in range(min(d.rows, d.cols))]
        for x, y in zip(diag, diag[1:]):
            assert x >= 0
            if x:
                assert y % x == 0
            else:
                assert y == 0


def test_snf_diagonal_known():
    a = IntegerMatrix([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert snf_diagonal(a) == [2, 2, 156]
    assert snf_diagonal(IntegerMatrix.zeros(2, 3)) == [0, 0]


def test_fp_rank():
    assert fp_rank([[2, 4], [4, 2]], 2) == 0
    assert fp_rank([[2, 4], [1, 2]], 2) == 1
    assert fp_rank([[2, 4], [1, 2]], 3) == 1
    assert fp_rank([[1, 0], [0, 1]], 5) == 2
    with pytest.raises(ValueError):
        fp_rank([[1]], 4)


def test_group_normalization():
    assert FgAbelianGroup(0, [4, 3]) == FgAbelianGroup(0, [12])
    assert FgAbelianGroup(0, [2, 2, 2, 2, 3]).invariant_factors == (2, 2, 2, 6)
    assert FgAbelianGroup(2, [1, 1]).render() == "Z^2"
    assert str(FgAbelianGroup()) == "0"
    assert FgAbelianGroup(0, [6, 4]).invariant_factors == (2, 12)


def test_group_render_primary():
    g = FgAbelianGroup(1, [12])
    assert g.render() == "Z + Z/12"
    assert g.render(primary=True) == "Z + Z/4 + Z/3"
    assert g.render(free_symbol="Z[1/2]") == "Z[1/2] + Z/12"


def test_direct_sum_and_localize():
    g = direct_sum(FgAbelianGroup(1, [4]), FgAbelianGroup(0, [6]))
    assert g == FgAbelianGroup(1, [2, 12])
    assert localize(g, (2,)) == FgAbelianGroup(1, [3])
    assert localize(g, (6,)) == FgAbelianGroup(1)
    with pytest.raises(ValueError):
        localize(g, (1,))


def test_mod_p_dims():
    g = FgAbelianGroup(1, [2, 12])
    assert mod_p_dims(g, 2) == (3, 2)
    assert mod_p_dims(g, 3) == (2, 1)
    assert mod_p_dims(g, 5) == (1, 0)


def test_json_round_trip():
    rng = random.Random(1)
    for _ in range(25):
        g = FgAbelianGroup(rng.randint(0, 3),
                           [rng.randint(2, 30) for _ in range(rng.randint(0, 4))])
        blob = json.dumps(group_to_json(g))
        assert group_from_json(json.loads(blob)) == g


def test_complex_rejects_nonzero_composite():
    good = CochainComplex([1, 1, 1],
                          [IntegerMatrix([[2]]), IntegerMatrix([[0]])])
    assert good.ranks == (1, 1, 1)
    with pytest.raises(ValueError):
        CochainComplex([1, 1, 1],
                       [IntegerMatrix([[2]]), IntegerMatrix([[3]])])


def test_cohomology_of_multiplication_complex():
    # 0 -> Z -2-> Z -0-> Z -3-> Z: middle degrees give Z/2 and Z/3
    cpx = CochainComplex([1, 1, 1, 1],
                         [IntegerMatrix([[2]]), IntegerMatrix([[0]]),
                          IntegerMatrix([[3]])])
    assert cohomology_at(cpx, 0) == FgAbelianGroup(0)
    assert cohomology_at(cpx, 1) == FgAbelianGroup(0, [2])
    assert cohomology_at(cpx, 2) == FgAbelianGroup(0)
    assert cohomology_at(cpx, 3) == FgAbelianGroup(0, [3])


def test_cohomology_rejects_out_of_range_degree():
    cpx = CochainComplex([1, 1], [IntegerMatrix([[1]])])
    with pytest.raises(ValueError):
        cohomology_at(cpx, 5)
    with pytest.raises(ValueError):
        cohomology_at(cpx, -1)


def test_mod_p_complex():
    delta = IntegerMatrix([[1, 1], [1, 1]])
    cpx = CochainComplex([2, 2, 2], [delta, IntegerMatrix.zeros(2, 2)], base=2)
    # kernel of the zero map is everything, image of delta is one-dimensional
    assert cohomology_at(cpx, 1) == FgAbelianGroup(0, [2])
    assert cohomology_at(cpx, 0) == FgAbelianGroup(0, [2])
