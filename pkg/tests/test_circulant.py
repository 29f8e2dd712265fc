import math
import random
from fractions import Fraction

import numpy as np
import pytest

from capax import circulant as ci
from capax.contact import smallest_prime_factor
from capax.errors import EvenProductError, InvalidInputError

F = Fraction


def test_form_validation():
    ci.CirculantForm(3, 5, F(-6, 5))
    with pytest.raises(EvenProductError):
        ci.CirculantForm(2, 5, F(-1))
    with pytest.raises(InvalidInputError):
        ci.CirculantForm(3, 5, F(-4))   # -z >= 15/4
    with pytest.raises(InvalidInputError):
        ci.CirculantForm(3, 5, F(1))    # z > 0


def test_smallest_valid_M_selection():
    assert ci.circulant_form(F(-6, 5), 5).M == 1     # 6/5 < 5/4
    assert ci.circulant_form(F(-2), 5).M == 3        # need M * 5/4 > 2
    assert ci.circulant_form(F(0), 3).M == 1


def test_eigenvalue_symmetry_and_z0():
    form = ci.CirculantForm(1, 3, F(0))
    eigs = ci.circulant_eigenvalues(form)
    assert eigs[0] == pytest.approx(0.0, abs=1e-15)
    form = ci.CirculantForm(3, 5, F(-6, 5))
    eigs = ci.circulant_eigenvalues(form)
    n = form.matrix_dim
    for k in range(1, n):
        assert eigs[k] == pytest.approx(eigs[n - k], abs=1e-12)


def test_index_count_examples():
    assert ci.index_count(ci.CirculantForm(3, 5, F(-6, 5))) == 3
    assert ci.index_count(ci.CirculantForm(1, 3, F(0))) == 1
    form = ci.CirculantForm(7, 5, F(-2))   # M ell = 35
    assert ci.index_count(form) == 5
    assert ci.jacobi_nonnegative_count(form) == 5


def test_fixed_index_count_examples():
    assert ci.fixed_index_count(ci.CirculantForm(3, 5, F(-6, 5))) == 1
    assert ci.fixed_index_count(ci.CirculantForm(1, 3, F(0))) == 1
    assert ci.fixed_index_count(ci.CirculantForm(5, 5, F(-11, 2))) == 3


def test_matrix_construction():
    form = ci.CirculantForm(3, 3, F(-1))
    a = ci.circulant_matrix(form)
    assert a.shape == (9, 9)
    assert a[0, 1] == 0.5 and a[0, 8] == 0.5 and a[0, 2] == 0.0
    assert np.allclose(a, a.T)
    diag = -math.cos(2 * math.pi / 9)
    assert a[4, 4] == pytest.approx(diag)


def test_jacobi_on_known_matrix():
    m = np.array([[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 2.0]])
    got = ci.jacobi_eigenvalues(m)
    # Characteristic roots of this tridiagonal matrix: 1, 2, 4.
    assert np.allclose(got, [1.0, 2.0, 4.0], atol=1e-10)
    with pytest.raises(InvalidInputError):
        ci.jacobi_eigenvalues(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_jacobi_matches_closed_formula_spectrum():
    rng = random.Random(5)
    for _ in range(15):
        mell = rng.choice([3, 9, 15, 21, 33, 45])
        ell = smallest_prime_factor(mell)
        z = F(-rng.randint(0, mell - 1), 4)
        if 4 * (-z) >= mell:
            continue
        form = ci.CirculantForm(mell // ell, ell, z)
        jac = ci.jacobi_eigenvalues(ci.circulant_matrix(form))
        closed = np.sort(ci.circulant_eigenvalues(form))
        assert np.max(np.abs(jac - closed)) < 1e-9


def test_exact_zero_modes():
    assert ci.exact_zero_modes(ci.CirculantForm(3, 5, F(0))) == (0,)
    assert ci.exact_zero_modes(ci.CirculantForm(3, 5, F(-2))) == (2, 13)
    assert ci.exact_zero_modes(ci.CirculantForm(3, 5, F(-6, 5))) == ()


def test_integer_z_zero_eigenvalues_counted_nonnegative():
    form = ci.CirculantForm(3, 5, F(-3))
    eigs = ci.jacobi_eigenvalues(ci.circulant_matrix(form))
    zeros = np.count_nonzero(np.abs(eigs) <= 1e-9)
    assert zeros == 2
    assert ci.jacobi_nonnegative_count(form) == ci.index_count(form) == 7


def test_count_nonnegative_guard_raises_on_unexpected_zero():
    with pytest.raises(AssertionError):
        ci.count_nonnegative(np.array([1.0, 1e-12]), exact_zeros=0)
