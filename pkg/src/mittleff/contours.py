"""Optimized integration contours for Hankel-type quadrature.

Two families of left-wrapping contours, each sampled at equally spaced
parameter values u = n*h:

* a parabola w(u) = mu*(1 + i*u)**2,
* a hyperbola w(u) = mu*(1 + sin(i*u - phi)).

The step h and scale mu are tied to the node count N so that the
discretization and truncation errors of the trapezoid sum balance, giving
geometric accuracy ~ predicted_rate**-N.  The hyperbola additionally has
its opening angle phi tuned once (optimize_phi) to maximize the decay
exponent.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from enum import Enum

from .exceptions import DomainError

# e**Re(w(0)) grows with N; cap well before double overflow
_N_MAX = 300


class ContourKind(str, Enum):
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes w(n*h) and weights C_n for n = 0..N, plus the prefactor A.

    Only the nonnegative half is stored; n < 0 follows from the
    reflection w(-u) = conj(w(u)), C_{-n} = conj(C_n).  Instances are
    immutable; a different N requires building a fresh rule (every node
    and weight changes with N).
    """

    kind: ContourKind
    N: int
    nodes: tuple[complex, ...]
    weights: tuple[complex, ...]
    A: float
    h: float
    mu: float
    predicted_rate: float
    phi: float | None = None


def _check_node_count(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"need an integer node count N >= 1, got {n!r}")
    if n > _N_MAX:
        raise DomainError(f"N={n} out of range (max {_N_MAX}: weights would overflow)")


def build_parabolic_rule(N: int) -> QuadratureRule:
    """Rule on the parabola w(u) = mu*(1 + i*u)**2 with h = 3/N, mu = pi*N/12."""
    _check_node_count(N)
    h = 3.0 / N
    mu = math.pi * N / 12.0
    nodes: list[complex] = []
    weights: list[complex] = []
    for n in range(N + 1):
        u = n * h
        w = complex(mu * (1.0 - u * u), 2.0 * mu * u)
        nodes.append(w)
        weights.append(cmath.exp(w) * complex(1.0, u))
    return QuadratureRule(
        kind=ContourKind.PARABOLIC,
        N=N,
        nodes=tuple(nodes),
        weights=tuple(weights),
        A=0.25,
        h=h,
        mu=mu,
        predicted_rate=8.12,
    )


def _check_phi(phi: float) -> None:
    if not math.pi / 4.0 < phi < math.pi / 2.0:
        raise DomainError(f"phi={phi!r} outside (pi/4, pi/2)")


def hyperbolic_a(phi: float) -> float:
    """Strip half-width parameter a(phi); diverges as phi -> pi/4."""
    _check_phi(phi)
    return math.acosh(2.0 * phi / ((4.0 * phi - math.pi) * math.sin(phi)))


def hyperbolic_b(phi: float) -> float:
    """Decay exponent b(phi): truncation error ~ exp(-b*N)."""
    return math.pi * (math.pi - 2.0 * phi) / hyperbolic_a(phi)


@functools.lru_cache(maxsize=1)
def optimize_phi() -> float:
    """Opening angle maximizing hyperbolic_b (~1.17210), by golden section."""
    inv_gold = (math.sqrt(5.0) - 1.0) / 2.0
    lo = math.pi / 4.0 + 1e-6
    hi = math.pi / 2.0 - 1e-6
    c = hi - inv_gold * (hi - lo)
    d = lo + inv_gold * (hi - lo)
    fc = hyperbolic_b(c)
    fd = hyperbolic_b(d)
    while hi - lo > 1e-12:
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - inv_gold * (hi - lo)
            fc = hyperbolic_b(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + inv_gold * (hi - lo)
            fd = hyperbolic_b(d)
    return 0.5 * (lo + hi)


def build_hyperbolic_rule(N: int) -> QuadratureRule:
    """Rule on the hyperbola w(u) = mu*(1 + sin(i*u - phi)) at the tuned angle.

    With phi* from optimize_phi: mu = pi*(4*phi* - pi)*N/a(phi*),
    h = a(phi*)/N, weights C_n = e**w(nh) * cos(i*n*h - phi*), and
    prefactor A = 2*phi* - pi/2.
    """
    _check_node_count(N)
    phi = optimize_phi()
    a = hyperbolic_a(phi)
    mu = math.pi * (4.0 * phi - math.pi) * N / a
    h = a / N
    sin_phi = math.sin(phi)
    cos_phi = math.cos(phi)
    nodes: list[complex] = []
    weights: list[complex] = []
    for n in range(N + 1):
        u = n * h
        w = complex(mu * (1.0 - sin_phi * math.cosh(u)), mu * cos_phi * math.sinh(u))
        c = cmath.exp(w) * complex(cos_phi * math.cosh(u), sin_phi * math.sinh(u))
        nodes.append(w)
        weights.append(c)
    return QuadratureRule(
        kind=ContourKind.HYPERBOLIC,
        N=N,
        nodes=tuple(nodes),
        weights=tuple(weights),
        A=2.0 * phi - math.pi / 2.0,
        h=h,
        mu=mu,
        predicted_rate=10.13,
        phi=phi,
    )
