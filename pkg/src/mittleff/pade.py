"""Two-point rational (Pade-type) approximation of E[alpha, beta](-x).

A rational function p(x)/q(x), deg p = deg q = r, is fitted so that its
expansion matches the function's Maclaurin series to order m at x = 0
and its algebraic decay series to order n at x = infinity, with
m + n = 2r + 1.  The matching conditions form a homogeneous linear
system C x = 0 for x = [p_0..p_{r-1}, q_0..q_r] (the leading
coefficient p_r is forced to zero by the decay at infinity).  Three
interchangeable solvers are provided; their coefficient vectors differ
noticeably in ill-conditioned cases, but the rational function values
they produce agree to near machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .exceptions import (
    ClusteredRootsError,
    ConvergenceError,
    DomainError,
    PoleError,
    SingularSystemError,
)
from .kernels import gamma_real, reciprocal_gamma

_EPS = float(np.finfo(float).eps)


class PadeSolver(str, Enum):
    FIXED_Q0 = "fixed"
    SVD_NULL = "svd"
    LU_HOMOGENEOUS = "lu"


@dataclass(frozen=True)
class PadeApproximant:
    alpha: float
    beta: float
    m: int
    n: int
    r: int
    p: tuple[float, ...]  # length r+1, p[r] == 0.0
    q: tuple[float, ...]  # length r+1
    solver: PadeSolver


@dataclass(frozen=True)
class PartialFractionForm:
    poles: tuple[complex, ...]
    residues: tuple[complex, ...]

    def evaluate_at(self, x: float) -> complex:
        return sum(res / (pole - x) for pole, res in zip(self.poles, self.residues))


def series_coeff_a(k: int, alpha: float, beta: float) -> float:
    """Maclaurin coefficient a_k = (-1)**k / Gamma(beta + k*alpha)."""
    if k < 0:
        raise DomainError(f"k={k!r} must be >= 0")
    return (-1.0) ** k * reciprocal_gamma(beta + k * alpha)


def series_coeff_b(k: int, alpha: float, beta: float) -> float:
    """Decay coefficient b_k = (-1)**(k-1) / Gamma(beta - k*alpha).

    For beta - k*alpha <= 1/2 the reflection form
    (-1)**k sin(pi*(k*alpha-beta)) Gamma(1+k*alpha-beta) / pi
    is used so gamma is never evaluated left of 1/2.
    """
    if k < 1:
        raise DomainError(f"k={k!r} must be >= 1")
    y = beta - k * alpha
    if y > 0.5:
        return (-1.0) ** (k - 1) * reciprocal_gamma(y)
    return (-1.0) ** k / math.pi * math.sin(math.pi * (k * alpha - beta)) * gamma_real(1.0 - y)


def assemble_pade_matrix(alpha: float, beta: float, m: int, n: int) -> np.ndarray:
    """Matching-condition matrix C, shape (2r, 2r+1), r = (m+n-1)/2.

    Unknown ordering is [p_0..p_{r-1}, q_0..q_r].  The first m rows make
    the series coefficients of p - a*q vanish at orders 0..m-1 (rows
    with k >= r carry no p term); the remaining n-1 rows do the same for
    the decay series at orders k = r-n+1..r-1 (negative k rows, present
    when m <= r, also carry no p term).
    """
    if m < 1 or n < 1:
        raise DomainError(f"orders m={m!r}, n={n!r} must be >= 1")
    if (m + n) % 2 == 0 or m + n < 3:
        raise DomainError(f"m+n={m + n!r} must be odd and >= 3")
    r = (m + n - 1) // 2
    C = np.zeros((2 * r, 2 * r + 1))
    row = 0
    for k in range(m):
        if k <= r - 1:
            C[row, k] = 1.0
        for j in range(0, min(k, r) + 1):
            C[row, r + j] = -series_coeff_a(k - j, alpha, beta)
        row += 1
    for k in range(r - n + 1, r):
        if k >= 0:
            C[row, k] = 1.0
        for j in range(max(k + 1, 0), r + 1):
            C[row, r + j] = -series_coeff_b(j - k, alpha, beta)
        row += 1
    return C


def _pack(
    x: np.ndarray, alpha: float, beta: float, m: int, n: int, solver: PadeSolver
) -> PadeApproximant:
    r = (m + n - 1) // 2
    p = tuple(float(v) for v in x[:r]) + (0.0,)
    q = tuple(float(v) for v in x[r:])
    return PadeApproximant(alpha, beta, m, n, r, p, q, solver)


def solve_fixed_q0(C: np.ndarray, alpha: float, beta: float, m: int, n: int) -> PadeApproximant:
    """Pin q_0 = 1 and solve the square system for the rest."""
    r = (m + n - 1) // 2
    reduced = np.delete(C, r, axis=1)
    rhs = -C[:, r]
    try:
        sol = np.linalg.solve(reduced, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(f"pinned system is singular: {exc}") from exc
    x = np.concatenate([sol[:r], [1.0], sol[r:]])
    return _pack(x, alpha, beta, m, n, PadeSolver.FIXED_Q0)


def solve_svd_null(
    C: np.ndarray, alpha: float, beta: float, m: int, n: int, rescale: bool = True
) -> PadeApproximant:
    """Coefficients from the right singular vector of the smallest singular value.

    The raw vector has unit 2-norm; with rescale (default) it is divided
    by q_0 afterwards whenever |q_0| > 1e-13.
    """
    r = (m + n - 1) // 2
    _, s, vt = np.linalg.svd(C)
    if s[-1] <= (2 * r + 1) * _EPS * s[0]:
        raise SingularSystemError("null space is not one-dimensional at working precision")
    x = vt[-1].copy()
    if rescale and abs(x[r]) > 1e-13:
        x /= x[r]
    return _pack(x, alpha, beta, m, n, PadeSolver.SVD_NULL)


def solve_lu_homogeneous(
    C: np.ndarray, alpha: float, beta: float, m: int, n: int, rescale: bool = True
) -> PadeApproximant:
    """Row-pivoted elimination of C, then back substitution with q_r = 1."""
    r = (m + n - 1) // 2
    U = np.array(C, dtype=float, copy=True)
    rows = 2 * r
    for i in range(rows):
        piv = i + int(np.argmax(np.abs(U[i:, i])))
        if piv != i:
            U[[i, piv]] = U[[piv, i]]
        if U[i, i] != 0.0:
            factors = U[i + 1 :, i] / U[i, i]
            U[i + 1 :, i:] -= np.outer(factors, U[i, i:])
    sigma1 = np.linalg.norm(C, 2)
    pivot_tol = rows * _EPS * sigma1
    x = np.zeros(2 * r + 1)
    x[2 * r] = 1.0
    for i in range(rows - 1, -1, -1):
        if abs(U[i, i]) <= pivot_tol:
            raise SingularSystemError(
                f"pivot {abs(U[i, i]):.3e} at row {i} below tolerance {pivot_tol:.3e}"
            )
        x[i] = -float(np.dot(U[i, i + 1 :], x[i + 1 :])) / U[i, i]
    if rescale and abs(x[r]) > 1e-13:
        x /= x[r]
    return _pack(x, alpha, beta, m, n, PadeSolver.LU_HOMOGENEOUS)


def build_pade(
    alpha: float,
    beta: float,
    m: int,
    n: int,
    solver: PadeSolver | str = PadeSolver.FIXED_Q0,
) -> PadeApproximant:
    """Assemble and solve in one step."""
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha={alpha!r} outside (0, 1]")
    solver = PadeSolver(solver)
    C = assemble_pade_matrix(alpha, beta, m, n)
    if solver is PadeSolver.FIXED_Q0:
        return solve_fixed_q0(C, alpha, beta, m, n)
    if solver is PadeSolver.SVD_NULL:
        return solve_svd_null(C, alpha, beta, m, n)
    return solve_lu_homogeneous(C, alpha, beta, m, n)


def _horner(coeffs: tuple[float, ...], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _horner_complex(coeffs: tuple[float, ...], x: complex) -> complex:
    acc = 0.0j
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def pade_eval(approx: PadeApproximant, x: float) -> float:
    """p(x)/q(x) at a point of [0, inf)."""
    if x < 0.0:
        raise DomainError(f"x={x!r} must be >= 0")
    den = _horner(approx.q, x)
    if den == 0.0:
        raise PoleError(f"q({x!r}) = 0")
    return _horner(approx.p, x) / den


def partial_fractions(approx: PadeApproximant) -> PartialFractionForm:
    """Poles of p/q and residues -p(chi)/q'(chi), so that
    p(x)/q(x) = sum_j residue_j / (chi_j - x).

    Roots of q come from simultaneous (Durand-Kerner) iteration started
    on a deterministic circle; conjugate pairs are symmetrized exactly.
    """
    r = approx.r
    q = approx.q
    scale = max(abs(c) for c in q)
    if abs(q[r]) <= 1e-13 * scale:
        raise DomainError("leading denominator coefficient is numerically zero")
    monic = [c / q[r] for c in q]  # monic[r] == 1

    radius = 1.0 + max(abs(c) for c in monic[:-1])
    roots = [
        radius * complex(math.cos(2.0 * math.pi * k / r + 0.7), math.sin(2.0 * math.pi * k / r + 0.7))
        for k in range(r)
    ]

    def monic_value(w: complex) -> complex:
        acc = 1.0 + 0.0j
        for c in reversed(monic[:-1]):
            acc = acc * w + c
        return acc

    # movement below 1e-13 is unreachable when the coefficients span many
    # orders of magnitude, so a plateau under 1e-9 also counts as settled
    prev_moved = math.inf
    stalled = 0
    for _ in range(400):
        moved = 0.0
        new_roots = list(roots)
        for i in range(r):
            denom = 1.0 + 0.0j
            for j in range(r):
                if j != i:
                    denom *= roots[i] - roots[j]
            step = monic_value(roots[i]) / denom
            new_roots[i] = roots[i] - step
            moved = max(moved, abs(step) / (1.0 + abs(new_roots[i])))
        roots = new_roots
        if moved <= 1e-13:
            break
        if moved <= 1e-9 and moved >= 0.5 * prev_moved:
            stalled += 1
            if stalled >= 3:
                break
        else:
            stalled = 0
        prev_moved = moved
    else:
        raise ConvergenceError("root iteration did not settle in 400 sweeps")

    # real coefficients: force exact conjugate pairing and kill stray imag
    cleaned = [
        complex(c.real, 0.0) if abs(c.imag) <= 1e-10 * (1.0 + abs(c)) else c for c in roots
    ]
    upper = [c for c in cleaned if c.imag > 0.0]
    lower = [c for c in cleaned if c.imag < 0.0]
    reals = [c for c in cleaned if c.imag == 0.0]
    paired: list[complex] = []
    if len(upper) == len(lower):
        remaining = list(lower)
        for u in upper:
            partner = min(remaining, key=lambda c: abs(c.conjugate() - u))
            remaining.remove(partner)
            mean = 0.5 * (u + partner.conjugate())
            paired.extend([mean, mean.conjugate()])
        cleaned = reals + paired
    poles = tuple(sorted(cleaned, key=lambda c: (c.real, c.imag)))

    for i in range(r):
        for j in range(i + 1, r):
            if abs(poles[i] - poles[j]) < 1e-8 * (1.0 + abs(poles[i])):
                raise ClusteredRootsError(
                    f"poles {poles[i]!r} and {poles[j]!r} are too close to separate"
                )

    dq = tuple((k + 1) * q[k + 1] for k in range(r))
    residues = tuple(
        -_horner_complex(approx.p, chi) / _horner_complex(dq, chi) for chi in poles
    )
    return PartialFractionForm(poles, residues)


def coefficients_csv(approx: PadeApproximant) -> str:
    lines = ["index,p,q"]
    for j in range(approx.r + 1):
        lines.append(f"{j},{approx.p[j]!r},{approx.q[j]!r}")
    return "\n".join(lines) + "\n"


def partial_fractions_csv(pf: PartialFractionForm) -> str:
    lines = ["re_pole,im_pole,re_residue,im_residue"]
    for pole, res in zip(pf.poles, pf.residues):
        lines.append(f"{pole.real!r},{pole.imag!r},{res.real!r},{res.imag!r}")
    return "\n".join(lines) + "\n"
