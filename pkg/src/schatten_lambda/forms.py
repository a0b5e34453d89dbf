"""Closed forms for the lambda function on unit balls, with constructive
extreme-point decompositions.

For an element a of the trace-norm unit ball,

    lambda(a) = (1 - ||a||_1 + 2 ||a||_inf) / 2,

attained by a = t*e1 + (1-t)*y where e1 is the top rank-one partial isometry
of a's singular system and y is an explicit trace-norm-one remainder.  The
other balls have their own affine forms (strictly convex Schatten-p, operator
norm via the invertibility margin, and the diagonal sequence spaces).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    DegenerateInputError,
    InvalidInputError,
    InvalidParameterError,
    OutsideUnitBallError,
)
from .interchange import matrix_to_dict
from .linalg import RANK_CUTOFF, SingularSystem, as_matrix, singular_values, svd

BALL_TOL = 1e-9
EXTREME_TOL = 1e-9


@dataclass
class AmenableTriplet:
    """Decomposition data a = t*e + (1-t)*y with e extreme and y in the ball."""

    e: np.ndarray
    y: np.ndarray
    t: float

    def as_dict(self) -> dict:
        return {"t": self.t, "e": matrix_to_dict(self.e), "y": matrix_to_dict(self.y)}


@dataclass
class LambdaResult:
    value: float
    branch: str
    norm1: float
    norm_inf: float
    witness: AmenableTriplet | None = None

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "branch": self.branch,
            "norm1": self.norm1,
            "norm_inf": self.norm_inf,
            "witness": None if self.witness is None else self.witness.as_dict(),
        }


class MinRankOne(NamedTuple):
    value: float
    argmin: np.ndarray


def _affine_lambda(norm1: float, norm_inf: float) -> float:
    # shared between the matrix and sequence branches so the diagonal
    # embedding is bit-exact
    return 0.5 * (1.0 - norm1 + 2.0 * norm_inf)


def _ball_values(values: np.ndarray) -> tuple[np.ndarray, float]:
    """Enforce trace-ball membership; renormalize inside the tolerance band.

    Renormalization acts on the singular values (scaling a matrix scales its
    singular values linearly), so the sequence branch can do the identical
    arithmetic.  Returns (values, applied scale).
    """
    total = float(np.sum(values))
    if total > 1.0 + BALL_TOL:
        raise OutsideUnitBallError(f"trace norm {total} exceeds the unit ball")
    if total > 1.0:
        return values / total, total
    return values, 1.0


def _attaining_triplet(
    sys: SingularSystem, vals: np.ndarray, norm1: float, norm_inf: float, t: float
) -> AmenableTriplet:
    k = vals.shape[0]
    if norm_inf >= 1.0 - EXTREME_TOL:
        # a is itself extreme: a = 1*a + 0*(-a)
        recon = (sys.left * vals) @ sys.right.conj().T
        return AmenableTriplet(e=recon, y=np.zeros_like(recon), t=1.0)
    denom = 1.0 + norm1 - 2.0 * norm_inf
    if denom < 1e-12:
        raise DegenerateInputError("remainder weight vanishes for this input")
    coeffs = np.empty(k)
    coeffs[0] = (norm1 - 1.0) / denom
    coeffs[1:] = 2.0 * vals[1:] / denom
    e = np.outer(sys.left[:, 0], sys.right[:, 0].conj())
    y = (sys.left * coeffs) @ sys.right.conj().T
    return AmenableTriplet(e=e, y=y, t=t)


def lambda_trace_class(a) -> LambdaResult:
    """Lambda function on the trace-norm unit ball, with attaining witness.

    lambda(a) = (1 - ||a||_1 + 2 ||a||_inf) / 2; equals ||a||_inf on the unit
    sphere and 1 exactly at the extreme points (rank-one partial isometries).
    """
    sys = svd(a)
    vals, _ = _ball_values(sys.values)
    norm1 = float(np.sum(vals))
    norm_inf = float(vals[0])
    if norm_inf >= 1.0 - EXTREME_TOL:
        # numerically extreme input: the weight is exactly 1
        value = 1.0
        branch = "extreme-point"
    else:
        value = _affine_lambda(norm1, norm_inf)
        branch = "trace-class"
    witness = _attaining_triplet(sys, vals, norm1, norm_inf, value)
    return LambdaResult(value, branch, norm1, norm_inf, witness)


def attaining_decomposition(a) -> AmenableTriplet:
    """Optimal decomposition a = lambda(a)*e1 + (1-lambda(a))*y, ||y||_1 = 1."""
    sys = svd(a)
    vals, _ = _ball_values(sys.values)
    norm1 = float(np.sum(vals))
    norm_inf = float(vals[0])
    return _attaining_triplet(sys, vals, norm1, norm_inf, _affine_lambda(norm1, norm_inf))


def greedy_decomposition(a) -> AmenableTriplet:
    """Top-singular-value split a = mu1*e1 + (1-mu1)*y.

    The remainder norm is (||a||_1 - mu1)/(1 - mu1) <= 1, so mu1 is a lower
    bound for lambda(a); the attaining decomposition improves on it.
    """
    sys = svd(a)
    vals, _ = _ball_values(sys.values)
    norm1 = float(np.sum(vals))
    if norm1 == 0.0:
        raise DegenerateInputError("the zero element has no greedy split")
    mu1 = float(vals[0])
    if mu1 >= 1.0 - EXTREME_TOL:
        recon = (sys.left * vals) @ sys.right.conj().T
        return AmenableTriplet(e=recon, y=np.zeros_like(recon), t=1.0)
    coeffs = vals / (1.0 - mu1)
    coeffs[0] = 0.0
    e = np.outer(sys.left[:, 0], sys.right[:, 0].conj())
    y = (sys.left * coeffs) @ sys.right.conj().T
    return AmenableTriplet(e=e, y=y, t=mu1)


def min_rank_one_distance(a, t, p) -> MinRankOne:
    """Minimum of ||a - t*e||_p^p over rank-one partial isometries e.

    Value |t - mu1|^p + sum_{j>=2} mu_j^p, attained at the top singular pair.
    """
    t = float(t)
    p = float(p)
    if not t > 0.0:
        raise InvalidParameterError(f"weight t must be positive, got {t}")
    if math.isnan(p) or math.isinf(p) or p < 1.0:
        raise InvalidParameterError(f"requires finite p >= 1, got {p}")
    sys = svd(a)
    vals = sys.values
    value = float(abs(t - vals[0]) ** p + np.sum(vals[1:] ** p))
    argmin = np.outer(sys.left[:, 0], sys.right[:, 0].conj())
    return MinRankOne(value=value, argmin=argmin)


def invertibility_margin(a) -> float:
    """Operator-norm distance to the non-invertible matrices.

    Smallest singular value for invertible input, else 0; singular values
    below RANK_CUTOFF * mu1 count as zero.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise InvalidInputError("invertibility margin requires a square matrix")
    vals = singular_values(a)
    smallest = float(vals[-1])
    if smallest > RANK_CUTOFF * float(vals[0]):
        return smallest
    return 0.0


def lambda_operator_norm(a) -> LambdaResult:
    """Lambda function on the operator-norm unit ball of square matrices.

    value = (1 + margin)/2 where margin is the invertibility margin; exactly
    1/2 for singular input.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise InvalidInputError("operator-norm ball of a non-square matrix")
    vals = singular_values(a)
    top = float(vals[0])
    if top > 1.0 + BALL_TOL:
        raise OutsideUnitBallError(f"operator norm {top} exceeds the unit ball")
    if top > 1.0:
        vals = vals / top
    norm1 = float(np.sum(vals))
    norm_inf = float(vals[0])
    cutoff = RANK_CUTOFF * norm_inf
    smallest = float(vals[-1])
    margin = smallest if smallest > cutoff else 0.0
    branch = "operator-norm-invertible" if margin > 0.0 else "operator-norm-singular"
    return LambdaResult(0.5 * (1.0 + margin), branch, norm1, norm_inf, None)


def lambda_schatten_p(a, p) -> LambdaResult:
    """Lambda function on a strictly convex Schatten ball: (1 + ||a||_p)/2."""
    p = float(p)
    if math.isnan(p) or p <= 1.0 or math.isinf(p):
        raise InvalidParameterError(f"requires p strictly between 1 and inf, got {p}")
    vals = singular_values(a)
    norm_p = float(np.sum(vals**p) ** (1.0 / p))
    if norm_p > 1.0 + BALL_TOL:
        raise OutsideUnitBallError(f"schatten-{p} norm {norm_p} exceeds the unit ball")
    norm_p = min(norm_p, 1.0)
    return LambdaResult(
        0.5 * (1.0 + norm_p),
        "schatten-p",
        float(np.sum(vals)),
        float(vals[0]),
        None,
    )


def _as_sequence(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1 or arr.shape[0] < 1:
        raise InvalidInputError("expected a nonempty 1-d sequence")
    if not np.isfinite(arr).all():
        raise InvalidInputError("sequence entries must be finite")
    return arr


def lambda_ell1(x) -> LambdaResult:
    """Lambda function for nonnegative ell-1 sequences: (1 - sum + 2*max)/2.

    Agrees bit-exactly with lambda_trace_class(diag(x)) for decreasing x.
    """
    arr = _as_sequence(x)
    if np.any(arr < 0.0):
        raise InvalidInputError("ell-1 branch requires nonnegative entries")
    total = float(np.sum(arr))
    if total > 1.0 + BALL_TOL:
        raise InvalidInputError(f"sequence sum {total} exceeds the unit ball")
    if total > 1.0:
        arr = arr / total
        total = float(np.sum(arr))
    top = float(np.max(arr))
    return LambdaResult(_affine_lambda(total, top), "ell1", total, top, None)


def lambda_ellinf(x) -> LambdaResult:
    """Lambda function for sup-norm sequences in [0, 1]: (1 + min)/2."""
    arr = _as_sequence(x)
    if np.any(arr < 0.0):
        raise InvalidInputError("ell-inf branch requires nonnegative entries")
    top = float(np.max(arr))
    if top > 1.0 + BALL_TOL:
        raise InvalidInputError(f"sequence entry {top} exceeds the unit ball")
    smallest = min(float(np.min(arr)), 1.0)
    return LambdaResult(0.5 * (1.0 + smallest), "ellinf", float(np.sum(arr)), top, None)


def counterexample_sequence(n: int, dim: int) -> np.ndarray:
    """diag(1/n, ..., 1/n, 0, ...) with n copies: unit trace norm, lambda = 1/n.

    Demonstrates that the infimum of lambda over the ball is 0 (no uniform
    lower bound on extreme-point weights).
    """
    if not isinstance(n, (int, np.integer)) or not isinstance(dim, (int, np.integer)):
        raise InvalidInputError("n and dim must be integers")
    if n < 1:
        raise InvalidInputError("n must be at least 1")
    if dim < n:
        raise InvalidInputError("dim must be at least n")
    diag = np.zeros(int(dim), dtype=np.complex128)
    diag[: int(n)] = 1.0 / float(n)
    return np.diag(diag)


def lambda_dispatch(a, p=1.0, witness: bool = True) -> LambdaResult:
    """Route to the branch for exponent p: 1 -> trace ball, inf -> operator
    ball, (1, inf) -> strictly convex ball (no witness available there)."""
    p = float(p)
    if math.isnan(p) or p < 1.0:
        raise InvalidParameterError(f"lambda requires p in [1, inf], got {p}")
    if p == 1.0:
        result = lambda_trace_class(a)
        if not witness:
            result.witness = None
        return result
    if math.isinf(p):
        return lambda_operator_norm(a)
    if witness:
        raise InvalidParameterError(
            "no attaining decomposition is constructed for p strictly between 1 and inf"
        )
    return lambda_schatten_p(a, p)
