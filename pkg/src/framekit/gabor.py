"""Discrete Weyl-Heisenberg (Gabor) systems on C^M.

The system of a prototype g under params (M, T, K) is

    g_{k,l}[n] = g[(n - l T) mod M] * exp(2 pi i k n / K)

for k = 0..K-1 modulations and l = 0..L-1 shifts, L = M / T.  Rows of the
frame are ordered with k outer, l inner.  K does not have to divide M for the
operators to make sense, but the exact composition identities (and therefore
frame-operator commutation and dual structure) need K | M; all bundled
configurations satisfy that.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, ParseError
from .frames import Frame, _spanning_spectrum, frame_operator

PROTOTYPE_NAMES = ("delta", "gaussian", "boxcar")


@dataclass(frozen=True)
class GaborParams:
    """(M, T, K): signal length, time step, modulation count."""

    length: int
    shift: int
    mods: int

    def __post_init__(self):
        for name in ("length", "shift", "mods"):
            val = getattr(self, name)
            if not isinstance(val, (int, np.integer)) or val < 1:
                raise DimensionMismatchError("%s must be a positive integer" % name)
        if self.length % self.shift:
            raise DimensionMismatchError(
                "shift %d must divide length %d" % (self.shift, self.length)
            )

    @property
    def steps(self):
        """L, number of translates."""
        return self.length // self.shift

    @property
    def count(self):
        """Total vectors K * L."""
        return self.mods * self.steps


def _proto_vector(proto, params):
    arr = np.asarray(proto, dtype=np.complex128).reshape(-1)
    if arr.shape[0] != params.length:
        raise DimensionMismatchError(
            "prototype length %d, expected %d" % (arr.shape[0], params.length)
        )
    return arr


def weyl_shift(x, k, l, params):
    """Translate by l*T and modulate by the k-th K-th root of unity."""
    arr = _proto_vector(x, params)
    phase = np.exp(2j * np.pi * k * np.arange(params.length) / params.mods)
    return np.roll(arr, l * params.shift) * phase


def weyl_matrix(k, l, params):
    """The unitary matrix of weyl_shift(., k, l)."""
    m = params.length
    mat = np.zeros((m, m), dtype=np.complex128)
    rows = np.arange(m)
    mat[rows, (rows - l * params.shift) % m] = np.exp(2j * np.pi * k * rows / params.mods)
    return mat


def build_gabor_frame(proto, params):
    """Frame of all K*L translates-modulates of the prototype, k outer."""
    g = _proto_vector(proto, params)
    rows = np.empty((params.count, params.length), dtype=np.complex128)
    i = 0
    for k in range(params.mods):
        for l in range(params.steps):
            rows[i] = np.conj(weyl_shift(g, k, l, params))
            i += 1
    return Frame(rows)


def gabor_dual_prototype(proto, params):
    """Dual prototype S^{-1} g of the system's own frame operator.

    When K | M the frame operator commutes with every system shift, so the
    canonical dual frame is the Weyl-Heisenberg system of this vector.
    """
    g = _proto_vector(proto, params)
    system = build_gabor_frame(g, params)
    w, v = _spanning_spectrum(system)
    return v @ ((v.conj().T @ g) / w)


def verify_wh_structure(dual_frame, proto, params, tol=1e-10):
    """Whether dual_frame is the Weyl-Heisenberg system of proto.

    Compares vectors in build order (k outer, l inner) within tol.
    """
    g = _proto_vector(proto, params)
    if dual_frame.dim != params.length or dual_frame.num_vectors != params.count:
        raise DimensionMismatchError(
            "frame is %d vectors in C^%d, params need %d in C^%d"
            % (dual_frame.num_vectors, dual_frame.dim, params.count, params.length)
        )
    vectors = dual_frame.vectors
    i = 0
    for k in range(params.mods):
        for l in range(params.steps):
            if np.max(np.abs(vectors[i] - weyl_shift(g, k, l, params))) > tol:
                return False
            i += 1
    return True


def gabor_frame_operator(proto, params):
    """Frame operator of the system; diagonal in the painless K = M, T | M case."""
    return frame_operator(build_gabor_frame(proto, params))


def named_prototype(name, length):
    """Built-in prototypes: delta, gaussian, boxcar.

    gaussian samples exp(-x^2/2) on the unit-spaced symmetric grid
    x_n = n - (length-1)/2 and divides by the maximum sample.
    """
    if length < 1:
        raise DimensionMismatchError("length must be >= 1")
    if name == "delta":
        g = np.zeros(length, dtype=np.complex128)
        g[0] = 1.0
        return g
    if name == "gaussian":
        x = np.arange(length) - (length - 1) / 2.0
        g = np.exp(-0.5 * x**2)
        return (g / g.max()).astype(np.complex128)
    if name == "boxcar":
        return np.ones(length, dtype=np.complex128)
    raise ParseError(
        "unknown prototype %r; expected one of %s" % (name, ", ".join(PROTOTYPE_NAMES))
    )
