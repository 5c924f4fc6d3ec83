"""Independent brute-force validators for the closed-form machinery.

Two unlike evaluations guard each other wherever an approximation is used:
the Gaussian principal value has a closed Dawson-function form and an
excision quadrature, and the joint-spectral-intensity normalisation is
re-integrated numerically.  Nothing here is a substitute for the signal
formulas; these routines quantify their approximations.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import QuadratureError
from .photon_source import PhotonPairSource, jsi
from .three_level import pv_gaussian_approx

_SQRT_PI = math.sqrt(math.pi)
_TWO_SQRT_PI = 2.0 * _SQRT_PI


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and subdivision budget for the numerical integrators."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_SPEC = QuadratureSpec()


def dawson(t: float) -> float:
    """Dawson integral D(t) = exp(-t^2) * int_0^t exp(x^2) dx, |error| < 1e-12.

    Power series (all terms positive, no cancellation) for |t| < 6, the
    asymptotic expansion truncated at its smallest term beyond; at the split
    point the asymptotic tail is already below 1e-15.
    """
    at = abs(t)
    if at == 0.0:
        return 0.0
    if at < 6.0:
        # int_0^t exp(x^2) dx = sum t^(2n+1) / (n! (2n+1)); all terms positive
        tt = at * at
        term = at
        total = at
        n = 1
        while True:
            term *= tt * (2 * n - 1) / (n * (2 * n + 1))
            total += term
            # <= so underflowed terms (and subnormal inputs) terminate
            if term <= 1e-17 * total:
                break
            n += 1
        result = math.exp(-tt) * total
    else:
        # 1/(2t) * sum (2k-1)!! / (2t^2)^k, terms added while they shrink
        inv = 1.0 / (2.0 * at * at)
        term = 1.0
        total = 1.0
        k = 1
        while k < 60:
            nxt = term * (2 * k - 1) * inv
            if nxt >= term or nxt < 1e-18 * total:
                break
            total += nxt
            term = nxt
            k += 1
        result = total / (2.0 * at)
    return -result if t < 0 else result


def pv_gaussian_exact(center: float, pole: float, sigma: float) -> float:
    """Exact principal value of exp(-((x-center)/sigma)^2) / (x - pole).

    By the substitution u = (x - center)/sigma this is the Hilbert transform
    of a Gaussian: -2 sqrt(pi) D((pole - center)/sigma).
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")
    return -_TWO_SQRT_PI * dawson((pole - center) / sigma)


# Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (positive half)
_XGK = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
)
_WGK = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
)
_WG = (
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
)


def _gk15(f, a: float, b: float) -> tuple[float, float]:
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(center)
    k15 = _WGK[7] * fc
    g7 = _WG[3] * fc
    for i in range(7):
        x = half * _XGK[i]
        s = f(center - x) + f(center + x)
        k15 += _WGK[i] * s
        if i % 2 == 1:
            g7 += _WG[i // 2] * s
    return half * k15, half * abs(k15 - g7)


def adaptive_quadrature(f, a: float, b: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Globally adaptive Gauss-Kronrod (G7/K15) integration.

    The interval with the largest error estimate is split first until the
    summed estimate meets max(abs_tol, rel_tol * |integral|) or the
    subdivision budget runs out.
    """
    if a == b:
        return 0.0
    value, err = _gk15(f, a, b)
    heap = [(-err, a, b, value, err)]
    total_value, total_err = value, err
    for _ in range(spec.max_subdivisions):
        if total_err <= max(spec.abs_tol, spec.rel_tol * abs(total_value)):
            return total_value
        neg_err, lo, hi, val, err = heapq.heappop(heap)
        m = 0.5 * (lo + hi)
        v1, e1 = _gk15(f, lo, m)
        v2, e2 = _gk15(f, m, hi)
        total_value += v1 + v2 - val
        total_err += e1 + e2 - err
        heapq.heappush(heap, (-e1, lo, m, v1, e1))
        heapq.heappush(heap, (-e2, m, hi, v2, e2))
    if total_err <= max(spec.abs_tol, spec.rel_tol * abs(total_value)):
        return total_value
    raise QuadratureError(
        f"integral did not converge within {spec.max_subdivisions} subdivisions "
        f"(error estimate {total_err:.3e})"
    )


def pv_quadrature(
    center: float, pole: float, sigma: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Principal value by symmetric excision, extrapolated to zero excision.

    The two-sided integral with matched excision eps is computed for
    eps in {1e-2, 1e-3, 1e-4} * sigma; the leading error is linear in eps,
    so a linear extrapolation from the two smallest values removes it (the
    largest eps serves as a convergence diagnostic).
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")

    def f(x):
        u = (x - center) / sigma
        return math.exp(-u * u) / (x - pole)

    lo = center - 8.0 * sigma
    hi = center + 8.0 * sigma
    if not (lo < pole < hi):
        return adaptive_quadrature(f, lo, hi, spec)
    estimates = []
    for frac in (1e-2, 1e-3, 1e-4):
        eps = frac * sigma
        left = adaptive_quadrature(f, lo, pole - eps, spec) if pole - eps > lo else 0.0
        right = adaptive_quadrature(f, pole + eps, hi, spec) if pole + eps < hi else 0.0
        estimates.append((eps, left + right))
    (e2, i2), (e3, i3) = estimates[1], estimates[2]
    return i3 + e3 * (i3 - i2) / (e2 - e3)


def _gauss_legendre_nodes(half_width: float, panels: int, order: int = 8):
    x, w = leggauss(order)
    edges = np.linspace(-half_width, half_width, panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    nodes = (mids[:, None] + half * x[None, :]).ravel()
    weights = np.tile(half * w, panels)
    return nodes, weights


def quad2d(f, s_window, i_window, panels: int) -> float:
    """Composite Gauss-Legendre tensor quadrature of f(omega_s, omega_i).

    Windows are (center, half_width) per axis; f is called point by point.
    """
    (sc, sw), (ic, iw) = s_window, i_window
    xs, ws = _gauss_legendre_nodes(sw, panels)
    xi, wi = _gauss_legendre_nodes(iw, panels)
    total = 0.0
    for a, wa in zip(xs, ws):
        row = 0.0
        for b, wb in zip(xi, wi):
            row += wb * f(sc + a, ic + b)
        total += wa * row
    return total


def jsa_norm(src: PhotonPairSource, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Numerical normalisation integral of the joint spectral intensity.

    Integrates the packaged jsi on a sum/difference-aligned grid (Jacobian
    one half) over +-6 widths of each printed Gaussian denominator, i.e. at
    least twelve intensity standard deviations per coordinate; panel counts
    are doubled until two successive estimates agree to the spec tolerances.
    """

    def integrand(u, v):
        return jsi(src, src.omega_s0 + 0.5 * (u + v), src.omega_i0 + 0.5 * (u - v))

    wu = 6.0 * (2.0 * src.sigma_p)
    wv = 6.0 * (2.0 * src.sigma_m)
    prev = None
    panels = 12
    for _ in range(5):
        val = 0.5 * quad2d(integrand, (0.0, wu), (0.0, wv), panels)
        if prev is not None and abs(val - prev) <= max(spec.abs_tol, spec.rel_tol * abs(val)):
            return val
        prev = val
        panels *= 2
    raise QuadratureError("jsa_norm did not converge while doubling panel counts")


@dataclass(frozen=True)
class PvErrorRow:
    """One characterisation row: scaled offset t, both PV magnitudes, relative gap."""

    t: float
    approx: float
    exact: float
    rel_err: float


def pv_approx_error_report(sigma: float, t_grid) -> list[PvErrorRow]:
    """Tabulate the PV approximation against the exact Dawson value.

    t is the pole offset in units of sigma; no pass/fail is attached, this
    is a characterisation artifact.
    """
    rows = []
    for t in t_grid:
        approx = pv_gaussian_approx(t * sigma, sigma)
        exact = abs(pv_gaussian_exact(0.0, t * sigma, sigma))
        rel = 0.0 if exact == 0.0 else abs(approx - exact) / exact
        rows.append(PvErrorRow(float(t), approx, exact, rel))
    return rows


def pv_error_report_csv(rows: list[PvErrorRow]) -> str:
    lines = ["t,approx,exact,rel_err"]
    for r in rows:
        lines.append(f"{r.t!r},{r.approx!r},{r.exact!r},{r.rel_err!r}")
    return "\n".join(lines) + "\n"
