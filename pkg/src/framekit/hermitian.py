"""Hermitian eigendecomposition by cyclic Jacobi rotations.

Self-contained solver for the small Hermitian matrices this package produces
(frame operators, range projections).  Each rotation zeroes one off-diagonal
pair through a complex plane rotation; sweeps repeat in cyclic order until the
off-diagonal Frobenius mass drops below OFF_TOLERANCE times the Frobenius norm
of the input.  Quadratic convergence makes the sweep limit generous.
"""

import numpy as np

from .errors import ConvergenceError, DimensionMismatchError, NotHermitianError

OFF_TOLERANCE = 1e-13
SWEEP_LIMIT = 100
HERMITIAN_RTOL = 1e-12


def is_hermitian(mat, rtol=HERMITIAN_RTOL):
    """True when mat is square and conjugate-symmetric within rtol (relative
    to the largest entry magnitude)."""
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        return False
    scale = max(np.max(np.abs(mat)), 1.0) if mat.size else 1.0
    return bool(np.max(np.abs(mat - mat.conj().T)) <= rtol * scale)


def off_diagonal_mass(mat):
    """Frobenius norm of the off-diagonal part."""
    mat = np.asarray(mat)
    off = mat.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigh(mat, tol=OFF_TOLERANCE, max_sweeps=SWEEP_LIMIT):
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    mat : (n, n) array_like
        Hermitian (conjugate-symmetric within HERMITIAN_RTOL).
    tol : float
        Convergence when off-diagonal Frobenius mass <= tol * ||mat||_F.
    max_sweeps : int
        Sweep budget; ConvergenceError beyond it.

    Returns
    -------
    w : (n,) float ndarray, eigenvalues ascending.
    v : (n, n) complex ndarray, unitary, columns are eigenvectors, so
        mat @ v[:, i] == w[i] * v[:, i].
    """
    a = np.array(mat, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError("expected a square matrix, got shape %r" % (a.shape,))
    if not np.all(np.isfinite(a)):
        raise DimensionMismatchError("matrix entries must be finite")
    if not is_hermitian(a):
        raise NotHermitianError("matrix is not conjugate-symmetric")
    n = a.shape[0]
    # exact symmetrization so rotations preserve Hermitian structure to the bit
    a = (a + a.conj().T) / 2.0

    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([a[0, 0].real]), v

    target = tol * np.linalg.norm(a)
    # contributions below skip_level per element cannot push the total mass
    # over target even if all n^2 entries sit at that level
    skip_level = target / (2.0 * n)

    sweeps = 0
    while off_diagonal_mass(a) > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                "Jacobi sweeps exhausted (%d) with off-diagonal mass %.3e > %.3e"
                % (max_sweeps, off_diagonal_mass(a), target)
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                r = abs(a[p, q])
                if r <= skip_level:
                    continue
                phase = a[p, q] / r
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                # columns [p, q] right-multiplied by [[c*phase, s*phase], [-s, c]]
                colp = a[:, p] * (c * phase) - a[:, q] * s
                colq = a[:, p] * (s * phase) + a[:, q] * c
                a[:, p] = colp
                a[:, q] = colq
                rowp = np.conj(c * phase) * a[p, :] - s * a[q, :]
                rowq = np.conj(s * phase) * a[p, :] + c * a[q, :]
                a[p, :] = rowp
                a[q, :] = rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p] * (c * phase) - v[:, q] * s
                vq = v[:, p] * (s * phase) + v[:, q] * c
                v[:, p] = vp
                v[:, q] = vq
        sweeps += 1

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def spectral_map(mat, fn, tol=OFF_TOLERANCE, max_sweeps=SWEEP_LIMIT):
    """Apply fn to the spectrum: U diag(fn(w)) U^H.

    fn receives the ascending eigenvalue array and returns the transformed
    values (e.g. reciprocals or inverse square roots).  The result is exactly
    Hermitian by construction.
    """
    w, v = jacobi_eigh(mat, tol=tol, max_sweeps=max_sweeps)
    fw = np.asarray(fn(w), dtype=np.complex128)
    out = (v * fw) @ v.conj().T
    return (out + out.conj().T) / 2.0
