import pytest

from conftest import subset_sum_counts
from detvar.poly import Polynomial, is_palindromic, poly_eval
from detvar.spaces import SpaceId, pgl_bm_ranks, projective_poincare, psu_poincare, quadric_surface_poincare


def test_projective():
    assert projective_poincare(0) == Polynomial([1])
    assert projective_poincare(3) == Polynomial({0: 1, 2: 1, 4: 1, 6: 1})
    for m in range(8):
        assert poly_eval(projective_poincare(m), -1) == m + 1
    with pytest.raises(ValueError):
        projective_poincare(-1)


def test_psu_small():
    assert psu_poincare(2) == Polynomial({0: 1, 3: 1})
    assert psu_poincare(3) == Polynomial({0: 1, 3: 1, 5: 1, 8: 1})
    five = psu_poincare(5)
    assert five.coeff(12) == 2
    assert poly_eval(five, 1) == 16


@pytest.mark.parametrize("n", range(2, 21))
def test_psu_structure(n):
    p = psu_poincare(n)
    assert is_palindromic(p)
    assert p.coeff(0) == 1 and p.leading_coeff == 1
    assert p.degree == n * n - 1
    assert poly_eval(p, -1) == 0
    assert poly_eval(p, 1) == 2 ** (n - 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_psu_against_subset_sums(n):
    assert psu_poincare(n).to_dict() == subset_sum_counts([2 * i + 1 for i in range(1, n)])


def test_pgl_examples():
    assert pgl_bm_ranks(2).ranks == {3: 1, 6: 1}
    assert pgl_bm_ranks(3).ranks == {8: 1, 11: 1, 13: 1, 16: 1}


@pytest.mark.parametrize("n", range(2, 9))
def test_pgl_support(n):
    g = pgl_bm_ranks(n)
    s = n * n - 1
    assert g.total() == 2 ** (n - 1)
    assert g.max_degree == 2 * s
    assert all(g[q] == 0 for q in range(s))
    assert g[n * n - 2] == 0
    assert min(g.ranks) == s and max(g.ranks) == 2 * s


def test_quadric():
    p = quadric_surface_poincare()
    assert p == Polynomial({0: 1, 2: 2, 4: 1})
    assert is_palindromic(p)
    assert poly_eval(p, -1) == 4


def test_space_id():
    assert SpaceId("quadric").poincare() == quadric_surface_poincare()
    assert SpaceId("pgl", 3).poincare() == psu_poincare(3)
    with pytest.raises(ValueError):
        SpaceId("psu", 1)
    with pytest.raises(ValueError):
        SpaceId("projective", -2)
