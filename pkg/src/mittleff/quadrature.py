"""Contour-quadrature evaluation of the Mittag-Leffler function.

The function is recovered from a Hankel-type integral of e**w times a
rational-like integrand in w.  Depending on where z sits relative to the
sector |Arg z| <= alpha*pi, the integrand is either used as-is (f_plain)
or has the simple pole at gamma = z**(1/alpha) split off analytically
(f_one), with the pole's residue alpha**-1 * gamma**(1-beta) * e**gamma
added back in closed form.  A separate entry point handles the negative
real axis for 1 < alpha < 2, where a conjugate pair of poles must be
split off (two-pole integrand f_2).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .contours import ContourKind, QuadratureRule
from .exceptions import DomainError
from .kernels import (
    cexp,
    cpow_principal as _cpow,
    principal_arg,
    psi1,
    psi2,
    reciprocal_gamma,
)

# below this relative distance to a pole the psi-form integrands take over
EPS_SWITCH = 0.1


class Method(str, Enum):
    SERIES = "series"
    ASYMPTOTIC = "asymp"
    QUAD_PARABOLIC = "quad-par"
    QUAD_HYPERBOLIC = "quad-hyp"
    REDUCTION = "reduction"


@dataclass(frozen=True)
class EvalResult:
    value: complex
    method: Method
    nodes_or_terms: int
    err_estimate: float


def _method_for(rule: QuadratureRule) -> Method:
    if rule.kind is ContourKind.PARABOLIC:
        return Method.QUAD_PARABOLIC
    return Method.QUAD_HYPERBOLIC


def q_sum(
    rule: QuadratureRule,
    integrand: Callable[[complex], complex],
    conj_symmetric: bool,
) -> complex:
    """Weighted node sum A * sum_n C_n f(w_n) over n = -N..N.

    With conj_symmetric the negative-n half mirrors the positive one, so
    only real parts are accumulated: A*(C_0 f(w_0) + 2 sum Re[C_n f(w_n)]).
    Otherwise f is also evaluated at the reflected nodes conj(w_n) with
    weights conj(C_n).  Fixed ascending-n order keeps results reproducible.
    """
    if conj_symmetric:
        acc = (rule.weights[0] * integrand(rule.nodes[0])).real
        tail = 0.0
        for n in range(1, rule.N + 1):
            tail += (rule.weights[n] * integrand(rule.nodes[n])).real
        return complex(rule.A * (acc + 2.0 * tail))
    acc_c = rule.weights[0] * integrand(rule.nodes[0])
    for n in range(1, rule.N + 1):
        acc_c += rule.weights[n] * integrand(rule.nodes[n])
        acc_c += rule.weights[n].conjugate() * integrand(rule.nodes[n].conjugate())
    return rule.A * acc_c


def f_plain(w: complex, z: complex, alpha: float, beta: float) -> complex:
    """Integrand w**(alpha-beta) / (w**alpha - z) on the cut plane."""
    return _cpow(w, alpha - beta) / (_cpow(w, alpha) - z)


def f_one(w: complex, z: complex, alpha: float, beta: float, gamma: complex) -> complex:
    """f_plain with the simple pole at gamma = z**(1/alpha) removed.

    Near the pole (relative offset eps below EPS_SWITCH) the difference
    would cancel, so an equivalent psi-kernel form is used instead.
    """
    eps = (w - gamma) / gamma
    if abs(eps) < EPS_SWITCH:
        num = psi1(eps, alpha - beta) - psi2(eps, alpha) / alpha
        return num / (_cpow(gamma, beta) * psi1(eps, alpha))
    return f_plain(w, z, alpha, beta) - _cpow(gamma, 1.0 - beta) / (alpha * (w - gamma))


def _f_pair_near(
    w: complex, alpha: float, beta: float, g_near: complex, g_far: complex, eps: complex
) -> complex:
    # two-pole integrand via psi kernels around g_near; exact for any |eps| <= 1
    p1 = psi1(eps, alpha)
    den_shared = w - g_far + eps * g_near
    near = (
        (w - g_far) * (psi1(eps, alpha - beta) - psi2(eps, alpha) / alpha)
        - g_near * p1 / alpha
    ) / (_cpow(g_near, beta) * p1 * den_shared)
    far = _cpow(g_near, 1.0 - beta) * _cpow(1.0 + eps, alpha - beta) / (p1 * den_shared) - _cpow(
        g_far, 1.0 - beta
    ) / (alpha * (w - g_far))
    return near + far


def _f_two(w: complex, x: float, alpha: float, beta: float, gp: complex, gm: complex) -> complex:
    ep = (w - gp) / gp
    if abs(ep) < EPS_SWITCH:
        return _f_pair_near(w, alpha, beta, gp, gm, ep)
    em = (w - gm) / gm
    if abs(em) < EPS_SWITCH:
        return _f_pair_near(w, alpha, beta, gm, gp, em)
    return f_plain(w, -x + 0.0j, alpha, beta) - (
        _cpow(gp, 1.0 - beta) / (w - gp) + _cpow(gm, 1.0 - beta) / (w - gm)
    ) / alpha


@functools.lru_cache(maxsize=128)
def origin_accuracy(rule: QuadratureRule, beta: float) -> float:
    """Observable error proxy: |Q(w**-beta) - 1/Gamma(beta)|.

    The same rule applied at z = 0 has a known exact answer; its error
    tracks the error at nearby z within about an order of magnitude.
    """
    got = q_sum(rule, lambda w: _cpow(w, -beta), True)
    return abs(got.real - reciprocal_gamma(beta))


def ml_quad(z: complex, alpha: float, beta: float, rule: QuadratureRule) -> EvalResult:
    """E[alpha, beta](z) by contour quadrature, alpha in (0, 1].

    Outside the sector |Arg z| <= alpha*pi the plain integrand is summed;
    inside it the pole at gamma = z**(1/alpha) is split off and its
    residue added in closed form.  z = 0 yields a NaN value (callers
    should route z = 0 to the series).
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha={alpha!r} outside (0, 1]")
    z = complex(z)
    method = _method_for(rule)
    n_nodes = 2 * rule.N + 1
    if z == 0:
        return EvalResult(complex(math.nan, math.nan), method, n_nodes, math.nan)
    theta = principal_arg(z)
    if abs(theta) > alpha * math.pi:
        sym = z.imag == 0.0
        value = q_sum(rule, lambda w: f_plain(w, z, alpha, beta), sym)
    else:
        gamma = _cpow(z, 1.0 / alpha)
        residue = _cpow(gamma, 1.0 - beta) * cexp(gamma) / alpha
        # gamma**(1-beta) is complex off the positive real axis, which breaks
        # the integrand's conjugate symmetry even for real z
        sym = z.imag == 0.0 and z.real > 0.0
        value = residue + q_sum(rule, lambda w: f_one(w, z, alpha, beta, gamma), sym)
    return EvalResult(value, method, n_nodes, origin_accuracy(rule, beta))


def ml_quad_neg_axis_wide_alpha(
    x: float, alpha: float, beta: float, rule: QuadratureRule
) -> EvalResult:
    """E[alpha, beta](-x) for x > 0 and 1 < alpha < 2.

    The conjugate pole pair gamma_pm = x**(1/alpha) e**(+-i pi/alpha) is
    split off; its combined residue reduces to the real cosine form, and
    the remaining analytic integrand f_2 is summed with the halved
    symmetric rule.
    """
    if not 1.0 < alpha < 2.0:
        raise DomainError(f"alpha={alpha!r} outside (1, 2)")
    if not x > 0.0:
        raise DomainError(f"x={x!r} must be positive")
    rho = x ** (1.0 / alpha)
    ang = math.pi / alpha
    gp = complex(rho * math.cos(ang), rho * math.sin(ang))
    gm = gp.conjugate()
    # cos(pi/alpha) < 0 for alpha < 2, so this never overflows
    residue_pair = (
        (2.0 / alpha)
        * x ** ((1.0 - beta) / alpha)
        * math.exp(rho * math.cos(ang))
        * math.cos((1.0 - beta) * ang + rho * math.sin(ang))
    )
    integral = q_sum(rule, lambda w: _f_two(w, x, alpha, beta, gp, gm), True)
    value = complex(residue_pair + integral.real)
    return EvalResult(value, _method_for(rule), 2 * rule.N + 1, origin_accuracy(rule, beta))


def shift_beta_down(z: complex, alpha: float, beta: float, m: int, tol: float = 1e-14) -> complex:
    """E[alpha, beta](z) routed through E[alpha, beta - m*alpha].

    Uses E[a,b](z) = z**-m E[a, b-m*a](z) - sum_{n=1..m} z**-n/Gamma(b-n*a).
    Explicit utility; never applied automatically.  Requires z != 0.
    """
    if m < 1:
        raise DomainError(f"m={m!r} must be >= 1")
    z = complex(z)
    if z == 0:
        raise DomainError("shift_beta_down needs z != 0")
    from .dispatch import ml_auto

    shifted = ml_auto(z, alpha, beta - m * alpha, tol).value
    tail = 0.0j
    zp = 1.0 + 0.0j
    for n in range(1, m + 1):
        zp /= z
        tail += zp * reciprocal_gamma(beta - n * alpha)
    return shifted * z**-m - tail


def shift_beta_up(z: complex, alpha: float, beta: float, m: int, tol: float = 1e-14) -> complex:
    """E[alpha, beta](z) routed through E[alpha, beta + m*alpha].

    Uses E[a,b](z) = z**m E[a, b+m*a](z) + sum_{n=0..m-1} z**n/Gamma(b+n*a).
    """
    if m < 1:
        raise DomainError(f"m={m!r} must be >= 1")
    z = complex(z)
    from .dispatch import ml_auto

    shifted = ml_auto(z, alpha, beta + m * alpha, tol).value
    head = 0.0j
    zp = 1.0 + 0.0j
    for n in range(m):
        head += zp * reciprocal_gamma(beta + n * alpha)
        zp *= z
    return shifted * z**m + head
