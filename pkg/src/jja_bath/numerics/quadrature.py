"""Adaptive and principal-value quadrature on top of QUADPACK."""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from jja_bath.errors import QuadratureError

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 200
DEFAULT_PV_RADII: tuple[float, ...] = (1e-3, 1e-4, 1e-5)
_TINY = 1e-300


@dataclass(frozen=True)
class QuadratureResult:
    """Value of a 1-D integral with its error estimate."""

    value: complex | float
    abs_err_estimate: float
    subdivisions: int

    def __post_init__(self):
        if not self.abs_err_estimate >= 0.0:
            raise ValueError("abs_err_estimate must be nonnegative")

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            value=self.value + other.value,
            abs_err_estimate=self.abs_err_estimate + other.abs_err_estimate,
            subdivisions=self.subdivisions + other.subdivisions,
        )

    def scaled(self, factor: complex | float) -> "QuadratureResult":
        return QuadratureResult(
            value=self.value * factor,
            abs_err_estimate=self.abs_err_estimate * abs(factor),
            subdivisions=self.subdivisions,
        )


def _is_complex_valued(f: Callable, a: float, b: float) -> bool:
    if math.isinf(b):
        probe = f(a + 1.0)
    else:
        probe = f(0.5 * (a + b))
    return bool(np.iscomplexobj(probe))


def _magnitude(f: Callable, a: float, b: float, **kwargs) -> float:
    """Loose estimate of the integral of |f|, used to judge roundoff-limited results."""
    try:
        value, _ = integrate.quad(lambda x: abs(f(x)), a, b, limit=DEFAULT_LIMIT, **kwargs)
    except Exception:
        return 0.0
    return float(value)


def _real_quad(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float,
    abs_tol: float,
    limit: int,
    **kwargs,
) -> QuadratureResult:
    out = integrate.quad(
        f,
        a,
        b,
        epsabs=abs_tol,
        epsrel=rel_tol,
        limit=limit,
        full_output=1,
        **kwargs,
    )
    value, err, info = out[0], out[1], out[2]
    subdivisions = int(info.get("last", info.get("lst", 0)))
    if len(out) > 3:
        message = out[3]
        magnitude = _magnitude(f, a, b, **kwargs)
        allowed = max(
            10.0 * rel_tol * abs(value),
            10.0 * abs_tol,
            1e3 * np.finfo(float).eps * magnitude,
            _TINY,
        )
        if err > allowed:
            raise QuadratureError(
                f"quadrature on [{a}, {b}] did not converge: {message}", achieved=err
            )
        logger.debug("accepting roundoff-limited quadrature on [%s, %s]: %s", a, b, message)
    return QuadratureResult(value=float(value), abs_err_estimate=float(err), subdivisions=subdivisions)


def quad_adaptive(
    f: Callable[[float], float | complex],
    a: float,
    b: float,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    limit: int = DEFAULT_LIMIT,
) -> QuadratureResult:
    """
    Integrate f over [a, b] with adaptive Gauss-Kronrod panels.

    An infinite upper limit is mapped onto (0, 1] with u = exp(-(x - a)).
    Complex integrands are integrated part by part.

    Args:
        f: Scalar function of one real variable.
        a: Finite lower limit.
        b: Upper limit, possibly ``math.inf``.
        rel_tol: Requested relative accuracy.
        abs_tol: Requested absolute accuracy (0 means purely relative).
        limit: Maximum number of subintervals.

    Returns:
        QuadratureResult with value, error estimate and subdivision count.

    Raises:
        ValueError: If the interval is empty or reversed.
        QuadratureError: If the subdivision limit is exhausted before convergence.
    """
    if not a < b:
        raise ValueError(f"quad_adaptive needs a < b, got [{a}, {b}]")
    if math.isinf(a):
        raise ValueError("lower limit must be finite")

    if math.isinf(b):

        def mapped(u: float, _f=f, _a=a):
            return _f(_a - math.log(u)) / u

        return quad_adaptive(mapped, 0.0, 1.0, rel_tol=rel_tol, abs_tol=abs_tol, limit=limit)

    if _is_complex_valued(f, a, b):
        re = _real_quad(lambda x: float(np.real(f(x))), a, b, rel_tol, abs_tol, limit)
        im = _real_quad(lambda x: float(np.imag(f(x))), a, b, rel_tol, abs_tol, limit)
        return QuadratureResult(
            value=complex(re.value, im.value),
            abs_err_estimate=math.hypot(re.abs_err_estimate, im.abs_err_estimate),
            subdivisions=re.subdivisions + im.subdivisions,
        )
    return _real_quad(lambda x: float(f(x)), a, b, rel_tol, abs_tol, limit)


def quad_fourier(
    f: Callable[[float], float],
    a: float,
    b: float,
    t: float,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    limit: int = DEFAULT_LIMIT,
) -> QuadratureResult:
    """
    Integrate f(x) exp(-i t x) over [a, b] for a real-valued f.

    Uses the cosine/sine weighted QUADPACK rules so that large t do not need
    extra subdivisions.
    """
    if t == 0.0:
        res = quad_adaptive(f, a, b, rel_tol=rel_tol, abs_tol=abs_tol, limit=limit)
        return QuadratureResult(complex(res.value), res.abs_err_estimate, res.subdivisions)
    if not a < b:
        raise ValueError(f"quad_fourier needs a < b, got [{a}, {b}]")
    if math.isinf(b) and abs_tol <= 0.0:
        # the infinite-range weighted rule only honours an absolute tolerance
        abs_tol = rel_tol * max(_magnitude(f, a, b), _TINY)
    cos_part = _real_quad(f, a, b, rel_tol, abs_tol, limit, weight="cos", wvar=t)
    sin_part = _real_quad(f, a, b, rel_tol, abs_tol, limit, weight="sin", wvar=t)
    return QuadratureResult(
        value=complex(cos_part.value, -sin_part.value),
        abs_err_estimate=math.hypot(cos_part.abs_err_estimate, sin_part.abs_err_estimate),
        subdivisions=cos_part.subdivisions + sin_part.subdivisions,
    )


def quad_pv(
    f: Callable[[float], float],
    a: float,
    b: float,
    pole: float,
    rel_tol: float = 1e-10,
    radii: Sequence[float] = DEFAULT_PV_RADII,
) -> QuadratureResult:
    """
    Cauchy principal value of the integral of f(x) / (x - pole) over [a, b].

    The leading logarithm f(pole) ln((b - pole)/(pole - a)) is taken analytically;
    the remaining regular integrand is integrated with a symmetric hole of
    radius h around the pole for each h in ``radii`` (fractions of b - a), and
    the results are Richardson-extrapolated to h = 0.

    Raises:
        ValueError: If the pole is not strictly inside (a, b).
        QuadratureError: If the excised integrals fail or the extrapolation
            disagrees with the smallest-radius value beyond tolerance.
    """
    if not a < pole < b:
        raise ValueError(f"pole {pole} must lie strictly inside ({a}, {b})")
    if math.isinf(a) or math.isinf(b):
        raise ValueError("quad_pv needs a finite interval")

    if _is_complex_valued(f, a, b):
        re = quad_pv(lambda x: float(np.real(f(x))), a, b, pole, rel_tol, radii)
        im = quad_pv(lambda x: float(np.imag(f(x))), a, b, pole, rel_tol, radii)
        return QuadratureResult(
            value=complex(re.value, im.value),
            abs_err_estimate=math.hypot(re.abs_err_estimate, im.abs_err_estimate),
            subdivisions=re.subdivisions + im.subdivisions,
        )

    f_pole = float(f(pole))
    log_term = f_pole * math.log((b - pole) / (pole - a))

    def regular(x: float) -> float:
        return (float(f(x)) - f_pole) / (x - pole)

    width = b - a
    half_gap = 0.5 * min(pole - a, b - pole)
    hs: list[float] = []
    values: list[float] = []
    err = 0.0
    subdivisions = 0
    for r in sorted(radii, reverse=True):
        h = min(r * width, half_gap)
        if hs and h >= hs[-1]:
            continue
        left = _real_quad(regular, a, pole - h, rel_tol, 0.0, DEFAULT_LIMIT)
        right = _real_quad(regular, pole + h, b, rel_tol, 0.0, DEFAULT_LIMIT)
        hs.append(h)
        values.append(left.value + right.value)
        err += left.abs_err_estimate + right.abs_err_estimate
        subdivisions += left.subdivisions + right.subdivisions

    if len(hs) == 1:
        extrapolated = values[0]
        extrapolation_err = abs(2.0 * hs[0] * regular(pole + 0.5 * hs[0]))
    else:
        degree = min(len(hs) - 1, 2)
        coeffs = np.polyfit(np.asarray(hs), np.asarray(values), degree)
        extrapolated = float(coeffs[-1])
        extrapolation_err = abs(extrapolated - values[-1]) * (hs[-1] / hs[0])

    total = extrapolated + log_term
    total_err = err / max(len(hs), 1) + extrapolation_err
    scale = max(abs(total), abs(log_term), abs(values[-1]), _TINY)
    if total_err > max(1e-6 * scale, 1e3 * rel_tol * scale):
        raise QuadratureError(
            f"principal value around {pole} did not converge", achieved=total_err
        )
    return QuadratureResult(value=total, abs_err_estimate=total_err, subdivisions=subdivisions)


def quad_vector(
    f: Callable[[float], np.ndarray],
    a: float,
    b: float,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    points: Sequence[float] = (),
    limit: int = 10000,
) -> tuple[np.ndarray, float]:
    """
    Integrate an array-valued f over [a, b] on one shared adaptive mesh.

    Used for Γ(t) on a whole time grid: the integrand is evaluated once per
    node for every t. The error criterion uses the max-norm over the array.

    Returns:
        (integral array, max-norm error estimate).

    Raises:
        QuadratureError: If the subdivision limit is hit before convergence.
    """
    if not a < b:
        raise ValueError(f"quad_vector needs a < b, got [{a}, {b}]")
    inner = [p for p in points if a < p < b]
    value, err, info = integrate.quad_vec(
        f,
        a,
        b,
        epsabs=max(abs_tol, _TINY),
        epsrel=rel_tol,
        norm="max",
        limit=limit,
        points=sorted(set(inner)) or None,
        full_output=True,
    )
    if info.status != 0:
        raise QuadratureError(f"vector quadrature on [{a}, {b}] did not converge: {info.message}", achieved=float(err))
    return np.asarray(value), float(err)
