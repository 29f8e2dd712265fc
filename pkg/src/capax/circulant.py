"""Circulant quadratic forms of discrete Hamiltonian loops.

The form on R^(M ell) has matrix A_z with -cos(2 pi z / (M ell)) on the
diagonal and 1/2 on the two cyclic off-diagonals.  Its eigenvalues are

    lambda_k(z) = cos(2 pi k / (M ell)) - cos(2 pi z / (M ell)),

so for odd M ell and 0 <= -z < M ell / 4 the number of nonnegative
eigenvalues is 1 + 2 floor(-z), and restricted to the cyclic-shift-fixed
subspace (Fourier modes k = 0 mod ell) it is 1 + 2 floor(-z / ell).

The integer index counts are computed exactly (the sign of lambda_k reduces
to the rational comparison min(k, n - k) <=> -z); floating point enters only
through the eigenvalue lists and the independent cyclic-Jacobi eigensolver
used as an oracle, both with a stated 1e-9 tolerance and symbolic detection
of the exact zeros (lambda_k = 0 iff -z is an integer and k = -z mod n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import EvenProductError, InvalidInputError
from .rationals import RationalLike, to_fraction

EIG_TOL = 1e-9

try:
    from numba import njit as _njit
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

    def _njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@dataclass(frozen=True)
class CirculantForm:
    """Parameters (M, ell, z) of the loop form, with M ell odd and
    0 <= -z < M ell / 4."""

    M: int
    ell: int
    z: Fraction

    def __post_init__(self):
        if self.M < 1 or self.ell < 1:
            raise InvalidInputError(
                f"M and ell must be positive, got M={self.M}, ell={self.ell}")
        if (self.M * self.ell) % 2 == 0:
            raise EvenProductError(
                f"M * ell must be odd, got {self.M} * {self.ell}")
        minus_z = -self.z
        if minus_z < 0 or 4 * minus_z >= self.M * self.ell:
            raise InvalidInputError(
                f"z must satisfy 0 <= -z < M*ell/4, got z={self.z} with "
                f"M*ell={self.M * self.ell}")

    @property
    def matrix_dim(self) -> int:
        return self.M * self.ell


def circulant_form(z: RationalLike, ell: int, M: int | None = None) -> CirculantForm:
    """Build a form, choosing the smallest odd M with -z < M ell / 4 when
    M is not pinned by the caller."""
    zq = to_fraction(z)
    if M is None:
        if ell % 2 == 0:
            raise EvenProductError(f"ell must be odd, got {ell}")
        M = 1
        while 4 * (-zq) >= M * ell:
            M += 2
    return CirculantForm(M, ell, zq)


def circulant_matrix(form: CirculantForm) -> np.ndarray:
    """Dense A_z (float64)."""
    n = form.matrix_dim
    diag = -math.cos(2.0 * math.pi * float(form.z) / n)
    a = np.zeros((n, n))
    np.fill_diagonal(a, diag)
    for i in range(n):
        a[i, (i + 1) % n] += 0.5
        a[i, (i - 1) % n] += 0.5
    return a


def fixed_subspace_matrix(form: CirculantForm) -> np.ndarray:
    """The form restricted to the shift-fixed subspace, as an M x M matrix.

    Fixed vectors are M-periodic; the restriction is ell times the M x M
    circulant with the same diagonal, whose eigenvalues are exactly the
    lambda_k with k = 0 mod ell.  (For M = 1 both wrap-around off-diagonal
    entries land on the diagonal.)
    """
    n = form.matrix_dim
    diag = -math.cos(2.0 * math.pi * float(form.z) / n)
    m = form.M
    if m == 1:
        return np.array([[diag + 1.0]])
    a = np.zeros((m, m))
    np.fill_diagonal(a, diag)
    for i in range(m):
        a[i, (i + 1) % m] += 0.5
        a[i, (i - 1) % m] += 0.5
    return a


def circulant_eigenvalues(form: CirculantForm) -> np.ndarray:
    """lambda_k for k = 0..n-1 from the closed formula (float64)."""
    n = form.matrix_dim
    k = np.arange(n)
    return np.cos(2.0 * np.pi * k / n) - math.cos(2.0 * math.pi * float(form.z) / n)


def _eigenvalue_sign(form: CirculantForm, k: int) -> int:
    """Exact sign of lambda_k: compare min(k, n-k) with -z rationally."""
    n = form.matrix_dim
    folded = min(k % n, n - (k % n))
    minus_z = -form.z
    if folded < minus_z:
        return 1
    if folded == minus_z:
        return 0
    return -1


def exact_zero_modes(form: CirculantForm) -> tuple[int, ...]:
    """Modes k with lambda_k exactly 0: k = +/- z mod n, when -z is integer."""
    minus_z = -form.z
    if minus_z.denominator != 1:
        return ()
    n = form.matrix_dim
    v = int(minus_z)
    if v == 0:
        return (0,)
    return tuple(sorted({v % n, (-v) % n}))


def index_count(form: CirculantForm) -> int:
    """Number of nonnegative eigenvalues of A_z: 1 + 2 floor(-z).

    The closed count is cross-checked against both the exact per-mode signs
    and a tolerance-guarded count over the floating eigenvalue list.
    """
    expected = 1 + 2 * math.floor(-form.z)
    n = form.matrix_dim
    exact = sum(1 for k in range(n) if _eigenvalue_sign(form, k) >= 0)
    if exact != expected:
        raise AssertionError(
            f"index formula mismatch: 1+2*floor(-z) = {expected}, "
            f"exact sign count = {exact}")
    floats = circulant_eigenvalues(form)
    guarded = count_nonnegative(floats, len(exact_zero_modes(form)))
    if guarded != expected:
        raise AssertionError(
            f"index formula mismatch against float eigenvalues: {expected} "
            f"vs {guarded}")
    return expected


def fixed_index_count(form: CirculantForm) -> int:
    """Nonnegative count on the fixed subspace: 1 + 2 floor(-z / ell),
    cross-checked against the exact signs of the modes k = 0 mod ell."""
    expected = 1 + 2 * math.floor(-form.z / form.ell)
    exact = sum(1 for k in range(0, form.matrix_dim, form.ell)
                if _eigenvalue_sign(form, k) >= 0)
    if exact != expected:
        raise AssertionError(
            f"fixed index formula mismatch: 1+2*floor(-z/ell) = {expected}, "
            f"mode count = {exact}")
    return expected


def count_nonnegative(values: np.ndarray, exact_zeros: int,
                      tol: float = EIG_TOL) -> int:
    """Count values >= 0, resolving the near-zero band symbolically.

    `exact_zeros` is the number of eigenvalues known to be exactly zero;
    every |value| <= tol must be one of them, and they count as nonnegative.
    """
    values = np.asarray(values)
    positive = int(np.count_nonzero(values > tol))
    near_zero = int(np.count_nonzero(np.abs(values) <= tol))
    if near_zero != exact_zeros:
        raise AssertionError(
            f"{near_zero} eigenvalues within {tol} of zero, but {exact_zeros} "
            f"exact zeros are expected; tolerance band too wide for this input")
    return positive + exact_zeros


# ---------------------------------------------------------------------------
# cyclic Jacobi eigensolver (independent oracle)
# ---------------------------------------------------------------------------

@_njit(cache=True)
def _jacobi_sweeps(a, max_sweeps, tol):  # pragma: no cover - exercised via wrapper
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += a[p, q] * a[p, q]
        if off <= tol * tol:
            return 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                app = a[p, p]
                aqq = a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = aip - s * (aiq + tau * aip)
                        a[i, q] = aiq + s * (aip - tau * aiq)
                        a[p, i] = a[i, p]
                        a[q, i] = a[i, q]
    return 1


def jacobi_eigenvalues(matrix: np.ndarray, tol: float = 1e-12,
                       max_sweeps: int = 64) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Deliberately independent of any library eigensolver; used as the oracle
    for the circulant index formulas.  Returns the eigenvalues sorted
    ascending.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError(f"need a square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, atol=1e-12):
        raise InvalidInputError("matrix is not symmetric")
    if a.shape[0] == 1:
        return a[0].copy()
    scale = float(np.max(np.abs(a)))
    if scale == 0.0:
        return np.zeros(a.shape[0])
    status = _jacobi_sweeps(a, max_sweeps, tol * scale * a.shape[0])
    if status != 0:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.sort(np.diagonal(a).copy())


def jacobi_nonnegative_count(form: CirculantForm, tol: float = EIG_TOL) -> int:
    """Oracle count of nonnegative eigenvalues of A_z via cyclic Jacobi."""
    eigs = jacobi_eigenvalues(circulant_matrix(form))
    return count_nonnegative(eigs, len(exact_zero_modes(form)), tol)


def jacobi_fixed_nonnegative_count(form: CirculantForm,
                                   tol: float = EIG_TOL) -> int:
    """Oracle count on the fixed subspace via cyclic Jacobi on the M x M
    restriction."""
    eigs = jacobi_eigenvalues(fixed_subspace_matrix(form))
    zeros = sum(1 for k in exact_zero_modes(form) if k % form.ell == 0)
    return count_nonnegative(eigs, zeros, tol)
