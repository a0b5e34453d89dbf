"""Self-contained dense complex linear algebra at desk scale.

The singular value decomposition is a one-sided Jacobi iteration and the
Hermitian eigensolver a cyclic two-sided Jacobi iteration (kernels in
``_jacobi``).  Output is canonicalized so equal inputs give byte-identical
systems: each left singular vector's largest-modulus component is made real
positive, and degenerate groups are ordered by descending lexicographic
comparison of the phase-normalized vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._jacobi import hermitian_sweeps, one_sided_sweeps
from .errors import InvalidInputError, InvalidParameterError

# Inputs are capped at 64; the Hermitian dilation of a 64x64 matrix is the
# largest 128x128 object the kernels ever see.
MAX_DIM = 128

JACOBI_TOL = 1e-12
HERMITIAN_TOL = 1e-10
RANK_CUTOFF = 1e-12


@dataclass
class SingularSystem:
    """Full singular system a = sum_k values[k] * left[:, k] @ right[:, k]^H.

    values are nonincreasing and nonnegative; the columns of left and right
    are orthonormal.
    """

    values: np.ndarray
    left: np.ndarray
    right: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.left * self.values) @ self.right.conj().T


@dataclass
class EigenEnumeration:
    """Eigenvalues of a Hermitian matrix split by sign and zero-padded.

    positive holds the nonincreasing positive eigenvalues, negative the
    nondecreasing negative ones (most negative first); both have length n.
    """

    positive: np.ndarray
    negative: np.ndarray


def as_matrix(a) -> np.ndarray:
    """Coerce to a validated complex128 matrix."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise InvalidInputError(f"expected a 2-d matrix, got ndim={arr.ndim}")
    rows, cols = arr.shape
    if rows < 1 or cols < 1:
        raise InvalidInputError("matrix dimensions must be at least 1")
    if rows > MAX_DIM or cols > MAX_DIM:
        raise InvalidInputError(f"matrix dimension exceeds supported cap {MAX_DIM}")
    if not np.isfinite(arr).all():
        raise InvalidInputError("matrix entries must be finite")
    return arr


def as_vector(u) -> np.ndarray:
    arr = np.asarray(u, dtype=np.complex128)
    if arr.ndim != 1 or arr.shape[0] < 1:
        raise InvalidInputError("expected a nonempty 1-d vector")
    if arr.shape[0] > MAX_DIM:
        raise InvalidInputError(f"vector dimension exceeds supported cap {MAX_DIM}")
    if not np.isfinite(arr).all():
        raise InvalidInputError("vector entries must be finite")
    return arr


def _prescale(a: np.ndarray) -> tuple[np.ndarray, float]:
    """Scale by a power of two so the largest entry modulus is in [0.5, 1).

    Power-of-two scaling is exact, so singular values and eigenvalues can be
    unscaled without rounding.  Returns (scaled copy, scale).
    """
    m = float(np.max(np.abs(a))) if a.size else 0.0
    if m == 0.0:
        return a.astype(np.complex128, copy=True), 1.0
    scale = math.ldexp(1.0, -math.frexp(m)[1])
    return a * scale, scale


def _column_norms(b: np.ndarray) -> np.ndarray:
    """Max-scaled Euclidean column norms.

    Exact when a column has a single nonzero real entry, which keeps the
    singular values of nonnegative diagonal matrices exact.
    """
    k = b.shape[1]
    out = np.empty(k)
    for c in range(k):
        col = np.abs(b[:, c])
        mx = float(col.max())
        if mx == 0.0:
            out[c] = 0.0
        else:
            out[c] = mx * math.sqrt(float(np.sum((col / mx) ** 2)))
    return out


def _complete_basis(left: np.ndarray, taken: list[int], col: int) -> None:
    """Fill left[:, col] with a unit vector orthogonal to the taken columns.

    Picks the standard basis vector with the largest residual (deterministic),
    then Gram-Schmidt orthogonalizes it.
    """
    m = left.shape[0]
    best_idx, best_res = 0, -1.0
    for i in range(m):
        e = np.zeros(m, dtype=np.complex128)
        e[i] = 1.0
        for c in taken:
            e -= np.vdot(left[:, c], e) * left[:, c]
        res = float(np.linalg.norm(e))
        if res > best_res + 1e-12:
            best_idx, best_res = i, res
    e = np.zeros(m, dtype=np.complex128)
    e[best_idx] = 1.0
    for c in taken:
        e -= np.vdot(left[:, c], e) * left[:, c]
    left[:, col] = e / np.linalg.norm(e)


def _normalize_phase(u: np.ndarray) -> complex:
    """Return the unit phase of u's largest-modulus component."""
    idx = int(np.argmax(np.abs(u)))
    z = u[idx]
    m = abs(z)
    return z / m if m > 0.0 else 1.0 + 0.0j


def _lex_key(u: np.ndarray) -> tuple:
    # descending lexicographic order over (re, im) pairs
    key = []
    for z in u:
        key.append(-z.real)
        key.append(-z.imag)
    return tuple(key)


def _jacobi_factor(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Run the one-sided kernel on a (rows >= cols). Returns (values, b, v)."""
    scaled, scale = _prescale(a)
    b = np.ascontiguousarray(scaled)
    k = b.shape[1]
    v = np.eye(k, dtype=np.complex128)
    one_sided_sweeps(b, v, JACOBI_TOL, 60)
    values = _column_norms(b)
    if scale != 1.0:
        values = values / scale
    return values, b, v


def svd(a) -> SingularSystem:
    """Singular value decomposition by one-sided Jacobi.

    Works for rectangular input; returns min(rows, cols) singular values in
    nonincreasing order with orthonormal left/right systems.  Left vectors of
    exactly-zero singular values are completed deterministically from the
    standard basis.
    """
    a = as_matrix(a)
    rows, cols = a.shape
    transposed = rows < cols
    work = a.conj().T if transposed else a
    values, b, v = _jacobi_factor(work)

    m, k = b.shape
    left = np.empty((m, k), dtype=np.complex128)
    nonzero = []
    zero = []
    for c in range(k):
        if values[c] == 0.0:
            zero.append(c)
        else:
            left[:, c] = b[:, c] / np.linalg.norm(b[:, c])
            nonzero.append(c)
    for c in zero:
        _complete_basis(left, nonzero, c)
        nonzero.append(c)

    right = v
    if transposed:
        left, right = right, left

    # canonical phases: jointly rotate each (left, right) pair
    for c in range(k):
        ph = np.conj(_normalize_phase(left[:, c]))
        left[:, c] *= ph
        right[:, c] *= ph

    order = sorted(range(k), key=lambda c: (-values[c], _lex_key(left[:, c])))
    return SingularSystem(
        values=np.ascontiguousarray(values[order]),
        left=np.ascontiguousarray(left[:, order]),
        right=np.ascontiguousarray(right[:, order]),
    )


def singular_values(a) -> np.ndarray:
    """Nonincreasing singular values (fast path, no vector canonicalization)."""
    a = as_matrix(a)
    work = a.conj().T if a.shape[0] < a.shape[1] else a
    values, _, _ = _jacobi_factor(work)
    values[::-1].sort()
    return values


def schatten_norm(a, p) -> float:
    """Schatten p-norm: the l^p norm of the singular values (p in [1, inf])."""
    p = float(p)
    if math.isnan(p) or p < 1.0:
        raise InvalidParameterError(f"schatten norm requires p >= 1, got {p}")
    values = singular_values(a)
    if math.isinf(p):
        return float(values[0])
    if p == 1.0:
        return float(np.sum(values))
    return float(np.sum(values**p) ** (1.0 / p))


def rank_one(u, v) -> np.ndarray:
    """Rank-one partial isometry u @ v^H from unit vectors (w -> <w, v> u)."""
    u = as_vector(u)
    v = as_vector(v)
    for w in (u, v):
        if abs(np.linalg.norm(w) - 1.0) > 1e-10:
            raise InvalidInputError("rank_one requires unit vectors")
    return np.outer(u, v.conj())


def wielandt_dilation(a) -> np.ndarray:
    """Hermitian dilation [[0, a], [a^H, 0]]; eigenvalues are +-singular values."""
    a = as_matrix(a)
    rows, cols = a.shape
    if rows != cols:
        raise InvalidInputError("dilation requires a square matrix")
    z = np.zeros((rows, rows), dtype=np.complex128)
    return np.block([[z, a], [a.conj().T, z]])


def hermitian_defect(h: np.ndarray) -> float:
    """Frobenius distance to the Hermitian part, ||h - h^H||_F."""
    return float(np.linalg.norm(h - h.conj().T))


def _require_hermitian(h) -> np.ndarray:
    h = as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise InvalidInputError("expected a square Hermitian matrix")
    if hermitian_defect(h) > HERMITIAN_TOL * max(1.0, float(np.linalg.norm(h))):
        raise InvalidInputError("matrix is not Hermitian within tolerance")
    return (h + h.conj().T) / 2.0


def hermitian_eig(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi.

    Returns (values ascending, vectors as columns).
    """
    h = _require_hermitian(h)
    scaled, scale = _prescale(h)
    n = h.shape[0]
    work = np.ascontiguousarray(scaled)
    v = np.eye(n, dtype=np.complex128)
    fro = float(np.linalg.norm(work))
    if fro > 0.0:
        hermitian_sweeps(work, v, 1e-14 * fro, 80)
    values = np.real(np.diag(work)).copy()
    if scale != 1.0:
        values = values / scale
    order = np.argsort(values, kind="stable")
    values = np.ascontiguousarray(values[order])
    vectors = np.ascontiguousarray(v[:, order])
    for c in range(n):
        vectors[:, c] *= np.conj(_normalize_phase(vectors[:, c]))
    return values, vectors


def hermitian_eigenvalues(h) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix."""
    return hermitian_eig(h)[0]


def eigen_enumeration(h) -> EigenEnumeration:
    """Sign-split, zero-padded eigenvalue enumeration of a Hermitian matrix."""
    values = hermitian_eigenvalues(h)
    n = values.shape[0]
    positive = np.zeros(n)
    negative = np.zeros(n)
    pos = np.sort(values[values > 0.0])[::-1]
    neg = np.sort(values[values < 0.0])
    positive[: pos.shape[0]] = pos
    negative[: neg.shape[0]] = neg
    return EigenEnumeration(positive=positive, negative=negative)


def orthogonality_defect(a, b) -> float:
    """max(||a b^H||_F, ||b^H a||_F); zero iff the pair is orthogonal."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise InvalidInputError("orthogonality defect requires equal shapes")
    bh = b.conj().T
    return max(float(np.linalg.norm(a @ bh)), float(np.linalg.norm(bh @ a)))
