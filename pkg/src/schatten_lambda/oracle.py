"""Independent verification: brute-force lambda search over extreme points,
singular-value perturbation inequalities, and randomized fuzz campaigns.

Everything in this module that needs a norm or a spectrum uses
numpy.linalg (LAPACK) rather than the package's own Jacobi code, so the
closed-form route and the verification route share no numerics.

The brute-force search certifies feasibility of a weight t by exhibiting an
extreme point e with ||a - t*e|| <= (1 - t) + FEAS_TOL; extreme points are
rank-one unit pairs for the trace ball and unitaries exp(iH) for the
operator ball.  Candidates are sampled uniformly and refined by alternating
gradient-free pattern search with shrinking step (floor 1e-8).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import (
    InvalidInputError,
    InvalidParameterError,
    OutsideUnitBallError,
    VerificationError,
)
from .forms import (
    AmenableTriplet,
    lambda_operator_norm,
    lambda_trace_class,
    min_rank_one_distance,
)
from .interchange import matrix_to_dict
from .linalg import (
    as_matrix,
    eigen_enumeration,
    hermitian_eigenvalues,
    orthogonality_defect,
    schatten_norm,
    singular_values,
    wielandt_dilation,
)

# Feasibility slack accepted by the search, and the matching conservative
# shift applied to the reported lower endpoint (lambda is Lipschitz with
# constant < 2 under perturbation of the decomposed element).
FEAS_TOL = 1e-6
LOWER_SHIFT = 2.0 * FEAS_TOL

STEP_FLOOR = 1e-8

FUZZ_KINDS = (
    "mirsky",
    "markus",
    "markus-singular",
    "lambda-trace",
    "lambda-operator",
    "min-rank-one",
    "orthogonal-additivity",
)


@dataclass
class SearchBudget:
    restarts: int = 6
    refinement_steps: int = 2500
    bisection_iters: int = 40
    seed: int = 0
    tolerance: float = 1e-3


class AmenabilityReport(NamedTuple):
    ok: bool
    residual: float
    ball_excess: float


@dataclass
class BruteForceResult:
    lower: float
    upper: float
    triplet: AmenableTriplet
    conclusive: bool
    norm: str
    evaluations: int


@dataclass
class SlackReport:
    lhs: float
    rhs: float
    slack: float
    p: float
    a: np.ndarray
    b: np.ndarray


@dataclass
class CampaignSummary:
    kind: str
    n: int
    trials: int
    seed: int
    min_slack: float | None
    max_dev: float | None
    failures: list
    passed: bool
    rows: list = field(default_factory=list, repr=False)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "min_slack": self.min_slack,
            "max_dev": self.max_dev,
            "failures": self.failures,
            "passed": self.passed,
        }


def _np_singular(m: np.ndarray) -> np.ndarray:
    return np.linalg.svd(m, compute_uv=False)

def _np_trace_norm(m: np.ndarray) -> float:
    return float(_np_singular(m).sum())

def _np_operator_norm(m: np.ndarray) -> float:
    return float(_np_singular(m)[0])

def _np_norm(m: np.ndarray, norm: str) -> float:
    return _np_trace_norm(m) if norm == "trace" else _np_operator_norm(m)


def amenability_check(a, triplet: AmenableTriplet, norm: str = "trace",
                      tol: float = 1e-9) -> AmenabilityReport:
    """Check a = t*e + (1-t)*y with e extreme and y inside the chosen ball.

    Residual is measured in trace norm, ball excess in the chosen norm; ok
    also requires e to be extreme to tol (singular values (1, 0, ...) for the
    trace ball, all 1 for the operator ball).
    """
    if norm not in ("trace", "operator"):
        raise InvalidParameterError(f"unknown ball {norm!r}")
    a = as_matrix(a)
    e = as_matrix(triplet.e)
    y = as_matrix(triplet.y)
    t = float(triplet.t)
    if a.shape != e.shape or a.shape != y.shape:
        raise InvalidInputError("triplet matrices must match the input shape")
    if not 0.0 <= t <= 1.0:
        raise InvalidParameterError(f"weight t must lie in [0, 1], got {t}")
    residual = _np_trace_norm(a - (t * e + (1.0 - t) * y))
    se = _np_singular(e)
    if norm == "trace":
        defect = abs(float(se[0]) - 1.0)
        if se.shape[0] > 1:
            defect = max(defect, float(se[1]))
        ball = _np_trace_norm(y)
    else:
        if e.shape[0] != e.shape[1]:
            raise InvalidInputError("operator-ball extreme points are square unitaries")
        defect = float(np.max(np.abs(se - 1.0)))
        ball = _np_operator_norm(y)
    excess = max(0.0, ball - 1.0)
    ok = residual <= tol and excess <= tol and defect <= tol
    return AmenabilityReport(ok=ok, residual=residual, ball_excess=excess)


def _unit_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return z / np.linalg.norm(z)


def _haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _unitary_from_params(params: np.ndarray, n: int) -> np.ndarray:
    """exp(iH) for the Hermitian H packed as n diagonal reals then upper
    off-diagonal (re, im) pairs."""
    h = np.zeros((n, n), dtype=np.complex128)
    for i in range(n):
        h[i, i] = params[i]
    ptr = n
    for i in range(n):
        for j in range(i + 1, n):
            z = params[ptr] + 1j * params[ptr + 1]
            ptr += 2
            h[i, j] = z
            h[j, i] = np.conj(z)
    w, vec = np.linalg.eigh(h)
    return (vec * np.exp(1j * w)) @ vec.conj().T


def _pack_hermitian(h: np.ndarray) -> np.ndarray:
    """Inverse of the packing consumed by _unitary_from_params."""
    n = h.shape[0]
    params = np.empty(n * n)
    for i in range(n):
        params[i] = h[i, i].real
    ptr = n
    for i in range(n):
        for j in range(i + 1, n):
            params[ptr] = h[i, j].real
            params[ptr + 1] = h[i, j].imag
            ptr += 2
    return params


class _TraceSearch:
    """min over rank-one unit pairs (u, v) of ||a - t * u v^H||_1."""

    def __init__(self, a: np.ndarray):
        self.a = a
        self.rows, self.cols = a.shape
        self._smart = None

    def random_start(self, rng):
        return (_unit_vector(rng, self.rows), _unit_vector(rng, self.cols))

    def smart_starts(self) -> list:
        # top singular pair of a: the certificate itself is re-evaluated by
        # direct norm arithmetic below, so a good initial guess cannot make an
        # infeasible weight look feasible.
        if self._smart is None:
            u, _, vh = np.linalg.svd(self.a)
            self._smart = [(u[:, 0].copy(), vh[0].conj().copy())]
        return list(self._smart)

    def value(self, t: float, payload) -> float:
        return float(self.value_batch(t, [payload])[0])

    def value_batch(self, t: float, payloads: list) -> np.ndarray:
        us = np.stack([p[0] for p in payloads])
        vs = np.stack([p[1] for p in payloads])
        diffs = self.a[None, :, :] - t * (us[:, :, None] * vs.conj()[:, None, :])
        svals = np.linalg.svd(diffs, compute_uv=False)
        return np.sum(svals, axis=1)

    def neighbors(self, payload, step: float) -> list:
        u, v = payload
        out = []
        for side, base in ((0, u), (1, v)):
            for idx in range(base.shape[0]):
                for delta in (step, -step, 1j * step, -1j * step):
                    cand = base.copy()
                    cand[idx] += delta
                    nrm = np.linalg.norm(cand)
                    if nrm == 0.0:
                        continue
                    cand /= nrm
                    out.append((cand, v) if side == 0 else (u, cand))
        return out

    def extreme_point(self, payload) -> np.ndarray:
        u, v = payload
        return np.outer(u, v.conj())


class _UnitarySearch:
    """min over unitaries exp(iH) of ||a - t * W||_inf."""

    def __init__(self, a: np.ndarray):
        self.a = a
        self.n = a.shape[0]
        self.dim = self.n * self.n
        self._smart = None

    def random_start(self, rng):
        return rng.standard_normal(self.dim) * 1.2

    def smart_starts(self) -> list:
        # polar factor of a plus the identity; starts only, see _TraceSearch
        if self._smart is None:
            n = self.n
            u, _, vh = np.linalg.svd(self.a)
            polar = u @ vh
            w, vec = np.linalg.eig(polar)
            q, _ = np.linalg.qr(vec)
            h = (q * np.angle(w)) @ q.conj().T
            h = (h + h.conj().T) / 2.0
            self._smart = [_pack_hermitian(h), np.zeros(n * n)]
        return [p.copy() for p in self._smart]

    def _batch_unitaries(self, params: np.ndarray) -> np.ndarray:
        n, count = self.n, params.shape[0]
        h = np.zeros((count, n, n), dtype=np.complex128)
        for i in range(n):
            h[:, i, i] = params[:, i]
        ptr = n
        for i in range(n):
            for j in range(i + 1, n):
                z = params[:, ptr] + 1j * params[:, ptr + 1]
                ptr += 2
                h[:, i, j] = z
                h[:, j, i] = np.conj(z)
        w, vec = np.linalg.eigh(h)
        scaled = vec * np.exp(1j * w)[:, None, :]
        return scaled @ np.conj(np.swapaxes(vec, 1, 2))

    def value(self, t: float, payload) -> float:
        return float(self.value_batch(t, [payload])[0])

    def value_batch(self, t: float, payloads: list) -> np.ndarray:
        params = np.stack(payloads)
        diffs = self.a[None, :, :] - t * self._batch_unitaries(params)
        svals = np.linalg.svd(diffs, compute_uv=False)
        return svals[:, 0]

    def neighbors(self, payload, step: float) -> list:
        out = []
        for idx in range(self.dim):
            for delta in (step, -step):
                cand = payload.copy()
                cand[idx] += delta
                out.append(cand)
        return out

    def extreme_point(self, payload) -> np.ndarray:
        return _unitary_from_params(payload, self.n)


def _refine(search, t: float, payload, bound: float, max_evals: int):
    """Best-improvement pattern search with shrinking step; neighbor batches
    are evaluated in one vectorized call.  Returns (payload, value, evals,
    certified)."""
    best = search.value(t, payload)
    evals = 1
    if best <= bound:
        return payload, best, evals, True
    step = 0.5
    while evals < max_evals and step >= STEP_FLOOR:
        cands = search.neighbors(payload, step)
        vals = search.value_batch(t, cands)
        evals += len(cands)
        k = int(np.argmin(vals))
        if vals[k] < best:
            best = float(vals[k])
            payload = cands[k]
            if best <= bound:
                return payload, best, evals, True
        else:
            step *= 0.5
    return payload, best, evals, False


def _certify(search, t: float, rng, budget: SearchBudget, incumbents: list):
    """Try to exhibit an extreme point within (1 - t) + FEAS_TOL of a."""
    bound = (1.0 - t) + FEAS_TOL
    starts = list(incumbents) + search.smart_starts()
    for _ in range(budget.restarts):
        starts.append(search.random_start(rng))
    start_vals = search.value_batch(t, starts)
    evals_total = len(starts)
    order = np.argsort(start_vals, kind="stable")
    k = int(order[0])
    if start_vals[k] <= bound:
        return True, starts[k], float(start_vals[k]), evals_total
    best_payload, best_val = starts[k], float(start_vals[k])
    for idx in order:
        payload, val, evals, ok = _refine(search, t, starts[int(idx)], bound,
                                          budget.refinement_steps)
        evals_total += evals
        if val < best_val:
            best_payload, best_val = payload, val
        if ok:
            return True, payload, val, evals_total
    return False, best_payload, best_val, evals_total


def brute_force_lambda(a, norm: str = "trace", budget: SearchBudget | None = None) -> BruteForceResult:
    """Bracket lambda(a) by bisection on the weight t.

    Feasibility of t is certified by finding an extreme point e with
    ||a - t*e|| <= (1 - t) + FEAS_TOL; the reported lower endpoint subtracts
    LOWER_SHIFT so the bracket never over-claims, and the upper endpoint is
    the smallest uncertified t plus the bisection tolerance.  Budget
    exhaustion before the bracket closes is reported, never hidden.
    """
    if norm not in ("trace", "operator"):
        raise InvalidParameterError(f"unknown ball {norm!r}")
    a = as_matrix(a)
    budget = budget or SearchBudget()
    if (budget.restarts < 1 or budget.refinement_steps < 1
            or budget.bisection_iters < 1 or not budget.tolerance > 0.0
            or budget.seed < 0):
        raise InvalidParameterError("search budget fields must be positive")
    if norm == "operator":
        if a.shape[0] != a.shape[1]:
            raise InvalidInputError("operator-norm ball of a non-square matrix")
        search = _UnitarySearch(a)
    else:
        search = _TraceSearch(a)
    if _np_norm(a, norm) > 1.0 + 1e-9:
        raise OutsideUnitBallError("input lies outside the chosen unit ball")

    incumbents: list = []
    step_counter = [0]
    evals_total = [0]

    def certify(t: float):
        rng = np.random.default_rng([budget.seed, step_counter[0]])
        step_counter[0] += 1
        ok, payload, val, evals = _certify(search, t, rng, budget, incumbents)
        evals_total[0] += evals
        if payload is not None:
            incumbents.clear()
            incumbents.append(payload)
        return ok, payload

    def triplet_at(t: float, payload) -> AmenableTriplet:
        e = search.extreme_point(payload)
        if t >= 1.0:
            y = np.zeros_like(e)
        else:
            y = (a - t * e) / (1.0 - t)
        return AmenableTriplet(e=e, y=y, t=t)

    ok, payload = certify(1.0)
    if ok:
        return BruteForceResult(
            lower=max(0.0, 1.0 - LOWER_SHIFT),
            upper=1.0,
            triplet=triplet_at(1.0, payload),
            conclusive=True,
            norm=norm,
            evaluations=evals_total[0],
        )

    ok, payload = certify(0.0)  # always succeeds: a = 0*e + 1*a
    lo, lo_payload = 0.0, payload
    hi = 1.0
    iters = 0
    while hi - lo > budget.tolerance and iters < budget.bisection_iters:
        mid = 0.5 * (lo + hi)
        ok, payload = certify(mid)
        if ok:
            lo, lo_payload = mid, payload
        else:
            hi = mid
        iters += 1

    return BruteForceResult(
        lower=max(0.0, lo - LOWER_SHIFT),
        upper=min(1.0, hi + budget.tolerance),
        triplet=triplet_at(lo, lo_payload),
        conclusive=(hi - lo) <= budget.tolerance,
        norm=norm,
        evaluations=evals_total[0],
    )


def _check_p(p, allow_inf: bool) -> float:
    p = float(p)
    if math.isnan(p) or p < 1.0 or (math.isinf(p) and not allow_inf):
        hi = "inf" if allow_inf else "finite"
        raise InvalidParameterError(f"requires {hi} p >= 1, got {p}")
    return p


def mirsky_slack(a, b, p) -> SlackReport:
    """Slack of ||diag(mu(a)) - diag(mu(b))||_p <= ||a - b||_p (nonnegative
    for any correct singular value implementation)."""
    p = _check_p(p, allow_inf=True)
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise InvalidInputError("requires two matrices of equal square shape")
    d = np.abs(singular_values(a) - singular_values(b))
    lhs = float(np.max(d)) if math.isinf(p) else float(np.sum(d**p) ** (1.0 / p))
    rhs = schatten_norm(a - b, p)
    return SlackReport(lhs=lhs, rhs=rhs, slack=rhs - lhs, p=p, a=a, b=b)


def markus_slack(a, b, p) -> SlackReport:
    """Slack of the Hermitian eigenvalue-enumeration inequality
    sum |alpha_n - beta_n|^p + sum |alpha_-n - beta_-n|^p <= ||a - b||_p^p."""
    p = _check_p(p, allow_inf=False)
    ea = eigen_enumeration(a)
    eb = eigen_enumeration(b)
    if ea.positive.shape != eb.positive.shape:
        raise InvalidInputError("requires two Hermitian matrices of equal size")
    lhs = float(
        np.sum(np.abs(ea.positive - eb.positive) ** p)
        + np.sum(np.abs(ea.negative - eb.negative) ** p)
    )
    rhs = schatten_norm(np.asarray(a) - np.asarray(b), p) ** p
    return SlackReport(lhs=lhs, rhs=rhs, slack=rhs - lhs, p=p,
                       a=as_matrix(a), b=as_matrix(b))


def markus_singular_slack(a, b, p) -> SlackReport:
    """Slack of sum |mu_n(a) - mu_n(b)|^p <= ||a - b||_p^p, cross-checked
    against the Hermitian-dilation route (both sides double under dilation)."""
    p = _check_p(p, allow_inf=False)
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise InvalidInputError("requires two matrices of equal square shape")
    lhs = float(np.sum(np.abs(singular_values(a) - singular_values(b)) ** p))
    rhs = schatten_norm(a - b, p) ** p
    dil = markus_slack(wielandt_dilation(a), wielandt_dilation(b), p)
    scale = max(1.0, abs(lhs) + abs(rhs))
    if abs(dil.lhs - 2.0 * lhs) > 1e-9 * scale or abs(dil.rhs - 2.0 * rhs) > 1e-9 * scale:
        raise VerificationError(
            "dilation route disagrees with the direct singular-value route: "
            f"lhs {lhs} vs {dil.lhs / 2.0}, rhs {rhs} vs {dil.rhs / 2.0}"
        )
    return SlackReport(lhs=lhs, rhs=rhs, slack=rhs - lhs, p=p, a=a, b=b)


def wielandt_match(a) -> tuple[float, np.ndarray, np.ndarray]:
    """Compare eigenvalues of the dilation with +-singular values of a.

    Returns (max abs difference, sorted eigenvalues, sorted signed values).
    """
    a = as_matrix(a)
    eigs = hermitian_eigenvalues(wielandt_dilation(a))
    mu = singular_values(a)
    signed = np.sort(np.concatenate([mu, -mu]))
    return float(np.max(np.abs(eigs - signed))), eigs, signed


# --- fuzz campaigns ---------------------------------------------------------

def _ginibre(rng, n: int) -> np.ndarray:
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))).astype(
        np.complex128
    )


def _scaled_ginibre(rng, n: int, norm: str, pinned: bool) -> np.ndarray:
    g = _ginibre(rng, n)
    target = 1.0 if pinned else float(rng.uniform(0.1, 1.0))
    cur = _np_norm(g, norm) if norm in ("trace", "operator") else float(np.linalg.norm(g))
    return g * (target / cur)


def _p_repr(p: float):
    return "inf" if math.isinf(p) else p


def _pair_failure(i, p, label, amount, a, b=None) -> dict:
    out = {
        "trial": i,
        "p": _p_repr(p),
        "detail": label,
        "amount": amount,
        "a": matrix_to_dict(a),
    }
    if b is not None:
        out["b"] = matrix_to_dict(b)
    return out


def fuzz_campaign(kind: str, n: int, trials: int, seed: int, tol: float = 1e-9) -> CampaignSummary:
    """Run a seeded randomized campaign of one verification kind.

    Matrices are complex Ginibre rescaled so the relevant norm is
    Uniform[0.1, 1.0], with every 10th trial pinned to norm 1.  The first
    violation beyond tolerance aborts the campaign and dumps the witnesses.
    Identical (kind, n, trials, seed) produce identical summaries.
    """
    if kind not in FUZZ_KINDS:
        raise InvalidParameterError(f"unknown campaign kind {kind!r}")
    if not isinstance(n, (int, np.integer)) or n < 1 or n > 64:
        raise InvalidParameterError("campaign dimension must be in [1, 64]")
    if kind == "lambda-operator" and n > 3:
        raise InvalidParameterError("operator-ball search supports n <= 3")
    if kind == "orthogonal-additivity" and n < 2:
        raise InvalidParameterError("orthogonal splits need n >= 2")
    if not isinstance(trials, (int, np.integer)) or trials < 1:
        raise InvalidParameterError("trials must be a positive integer")
    if not isinstance(seed, (int, np.integer)) or seed < 0:
        raise InvalidParameterError("seed must be a nonnegative integer")
    n = int(n)
    trials = int(trials)
    seed = int(seed)

    rows: list = []
    failures: list = []
    min_slack = math.inf
    max_dev = 0.0
    uses_slack = kind in ("mirsky", "markus", "markus-singular", "min-rank-one")
    uses_dev = kind in ("lambda-trace", "lambda-operator", "orthogonal-additivity")

    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        pinned = i % 10 == 0

        if kind == "mirsky":
            a = _scaled_ginibre(rng, n, "trace", pinned)
            b = _scaled_ginibre(rng, n, "trace", False)
            for p in (1.0, 2.0, math.inf):
                r = mirsky_slack(a, b, p)
                rows.append({"trial": i, "p": _p_repr(p), "slack": r.slack})
                min_slack = min(min_slack, r.slack)
                if r.slack < -tol:
                    failures.append(_pair_failure(i, p, "mirsky slack", r.slack, a, b))
                    break

        elif kind == "markus":
            ga, gb = _ginibre(rng, n), _ginibre(rng, n)
            a = (ga + ga.conj().T) / 2.0
            b = (gb + gb.conj().T) / 2.0
            a *= float(rng.uniform(0.1, 1.0)) / float(np.linalg.norm(a))
            b *= float(rng.uniform(0.1, 1.0)) / float(np.linalg.norm(b))
            for p in (1.0, 2.0, 3.0):
                r = markus_slack(a, b, p)
                rows.append({"trial": i, "p": p, "slack": r.slack})
                min_slack = min(min_slack, r.slack)
                if r.slack < -tol:
                    failures.append(_pair_failure(i, p, "markus slack", r.slack, a, b))
                    break

        elif kind == "markus-singular":
            a = _scaled_ginibre(rng, n, "trace", pinned)
            b = _scaled_ginibre(rng, n, "trace", False)
            for p in (1.0, 2.0, 3.0):
                try:
                    r = markus_singular_slack(a, b, p)
                except VerificationError as exc:
                    failures.append(_pair_failure(i, p, str(exc), 0.0, a, b))
                    break
                rows.append({"trial": i, "p": p, "slack": r.slack})
                min_slack = min(min_slack, r.slack)
                if r.slack < -tol:
                    failures.append(
                        _pair_failure(i, p, "markus singular slack", r.slack, a, b)
                    )
                    break

        elif kind == "lambda-trace":
            a = _scaled_ginibre(rng, n, "trace", pinned)
            res = lambda_trace_class(a)
            rep = amenability_check(a, res.witness, "trace", tol=1e-9)
            bf = brute_force_lambda(
                a, "trace",
                SearchBudget(restarts=4, refinement_steps=2500, bisection_iters=40,
                             seed=seed * 1_000_003 + i, tolerance=9e-4),
            )
            dev = abs(res.value - 0.5 * (bf.lower + bf.upper))
            rows.append({"trial": i, "lambda": res.value, "lower": bf.lower,
                         "upper": bf.upper, "dev": dev})
            max_dev = max(max_dev, dev)
            bad = (not rep.ok or not bf.conclusive
                   or not bf.lower <= res.value <= bf.upper or dev > 1e-3)
            if bad:
                failures.append({
                    "trial": i, "detail": "lambda-trace disagreement",
                    "lambda": res.value, "lower": bf.lower, "upper": bf.upper,
                    "residual": rep.residual, "a": matrix_to_dict(a),
                })

        elif kind == "lambda-operator":
            a = _scaled_ginibre(rng, n, "operator", pinned)
            made_singular = i % 5 == 0
            if made_singular:
                u, s, vh = np.linalg.svd(a)
                s[-1] = 0.0
                a = (u * s) @ vh
            res = lambda_operator_norm(a)
            bf = brute_force_lambda(
                a, "operator",
                SearchBudget(restarts=4, refinement_steps=2200, bisection_iters=40,
                             seed=seed * 1_000_003 + i, tolerance=9e-4),
            )
            dev = abs(res.value - 0.5 * (bf.lower + bf.upper))
            rows.append({"trial": i, "lambda": res.value, "lower": bf.lower,
                         "upper": bf.upper, "dev": dev})
            max_dev = max(max_dev, dev)
            bad = (not bf.conclusive or not bf.lower <= res.value <= bf.upper
                   or dev > 1e-3 or (made_singular and res.value != 0.5))
            if bad:
                failures.append({
                    "trial": i, "detail": "lambda-operator disagreement",
                    "lambda": res.value, "lower": bf.lower, "upper": bf.upper,
                    "singular": made_singular, "a": matrix_to_dict(a),
                })

        elif kind == "min-rank-one":
            a = _scaled_ginibre(rng, n, "trace", pinned)
            t = float(rng.uniform(0.05, 1.3))
            p = (1.0, 2.0, 3.0)[i % 3]
            closed = min_rank_one_distance(a, t, p)
            f_argmin = float(np.sum(_np_singular(a - t * closed.argmin) ** p))
            samples = 800
            us = rng.standard_normal((samples, n)) + 1j * rng.standard_normal((samples, n))
            vs = rng.standard_normal((samples, n)) + 1j * rng.standard_normal((samples, n))
            us /= np.linalg.norm(us, axis=1, keepdims=True)
            vs /= np.linalg.norm(vs, axis=1, keepdims=True)
            diffs = a[None, :, :] - t * (us[:, :, None] * vs.conj()[:, None, :])
            svals = np.linalg.svd(diffs, compute_uv=False)
            fmin = float(np.min(np.sum(svals**p, axis=1)))
            margin = fmin - closed.value
            rows.append({"trial": i, "p": p, "slack": margin})
            min_slack = min(min_slack, margin)
            if margin < -tol or abs(f_argmin - closed.value) > 1e-9:
                failures.append(_pair_failure(
                    i, p, "closed-form rank-one minimum beaten", margin, a))

        elif kind == "orthogonal-additivity":
            uu = _haar_unitary(rng, n)
            vv = _haar_unitary(rng, n)
            coeff = rng.uniform(0.2, 1.0, n)
            coeff /= coeff.sum()
            k = n // 2
            a = (uu[:, :k] * coeff[:k]) @ vv[:, :k].conj().T
            b = (uu[:, k:] * coeff[k:]) @ vv[:, k:].conj().T
            defect = orthogonality_defect(a, b)
            worst = 0.0
            for p in (1.0, 2.0, 3.0):
                na = schatten_norm(a, p) ** p
                nb = schatten_norm(b, p) ** p
                for sign in (1.0, -1.0):
                    dev = abs(schatten_norm(a + sign * b, p) ** p - (na + nb))
                    worst = max(worst, dev)
                rows.append({"trial": i, "p": p, "dev": worst})
            max_dev = max(max_dev, worst)
            if worst > tol or defect > 1e-10:
                failures.append(_pair_failure(
                    i, 0.0, "orthogonal additivity violated", worst, a, b))

        if failures:
            break

    return CampaignSummary(
        kind=kind,
        n=n,
        trials=trials,
        seed=seed,
        min_slack=(None if not uses_slack or min_slack is math.inf else min_slack),
        max_dev=(max_dev if uses_dev else None),
        failures=failures,
        passed=not failures,
        rows=rows,
    )
