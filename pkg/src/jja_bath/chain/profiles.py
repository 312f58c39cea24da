"""Evaluable position profiles ν(x), E_C(x), E_J(x) and their JSON descriptors."""

from abc import ABC, abstractmethod
from typing import Any, ClassVar, Sequence

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.interpolate import CubicSpline


class Profile(ABC):
    """A smooth scalar function of position with its first derivative."""

    form: ClassVar[str]

    @abstractmethod
    def value(self, x):
        """Profile value at x (scalar or array)."""
        pass

    @abstractmethod
    def derivative(self, x):
        """First derivative at x (scalar or array)."""
        pass

    @abstractmethod
    def params(self) -> dict[str, Any]:
        """JSON-ready parameters, inverse of ``from_params``."""
        pass

    def __call__(self, x):
        return self.value(x)

    def to_dict(self) -> dict[str, Any]:
        return {"form": self.form, "params": self.params()}

    @classmethod
    def from_params(cls, params: dict[str, Any]) -> "Profile":
        return cls(**params)

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "Profile":
        """
        Rebuild a profile from ``{form, params}``.

        Raises:
            ValueError: If the form tag is unknown.
        """
        form = data.get("form")
        if form not in PROFILE_FORMS:
            raise ValueError(f"unknown profile form {form!r}; expected one of {sorted(PROFILE_FORMS)}")
        return PROFILE_FORMS[form].from_params(dict(data.get("params", {})))


def _scalar_or_array(result, x):
    return float(result) if np.ndim(x) == 0 else result


class Polynomial(Profile):
    """Σ c_k x^k with ascending coefficients."""

    form = "polynomial"

    def __init__(self, coeffs: Sequence[float]):
        if len(coeffs) == 0:
            raise ValueError("polynomial needs at least one coefficient")
        self.coeffs = np.asarray(coeffs, dtype=float)

    def value(self, x):
        return _scalar_or_array(P.polyval(x, self.coeffs), x)

    def derivative(self, x):
        return _scalar_or_array(P.polyval(x, P.polyder(self.coeffs)), x)

    def params(self) -> dict[str, Any]:
        return {"coeffs": self.coeffs.tolist()}


class Rational(Profile):
    """|x|^abs_power · N(x) / D(x), polynomials with ascending coefficients."""

    form = "rational"

    def __init__(self, numerator: Sequence[float], denominator: Sequence[float], abs_power: int = 0):
        if len(numerator) == 0 or len(denominator) == 0:
            raise ValueError("rational profile needs nonempty numerator and denominator")
        if abs_power < 0:
            raise ValueError("abs_power must be nonnegative")
        self.numerator = np.asarray(numerator, dtype=float)
        self.denominator = np.asarray(denominator, dtype=float)
        self.abs_power = int(abs_power)

    @classmethod
    def from_polynomial(cls, poly: Polynomial) -> "Rational":
        return cls(poly.coeffs, [1.0])

    def value(self, x):
        x_arr = np.asarray(x, dtype=float)
        out = P.polyval(x_arr, self.numerator) / P.polyval(x_arr, self.denominator)
        if self.abs_power:
            out = out * np.abs(x_arr) ** self.abs_power
        return _scalar_or_array(out, x)

    def derivative(self, x):
        x_arr = np.asarray(x, dtype=float)
        num = P.polyval(x_arr, self.numerator)
        den = P.polyval(x_arr, self.denominator)
        d_num = P.polyval(x_arr, P.polyder(self.numerator))
        d_den = P.polyval(x_arr, P.polyder(self.denominator))
        ratio_prime = (d_num * den - num * d_den) / den**2
        if not self.abs_power:
            return _scalar_or_array(ratio_prime, x)
        k = self.abs_power
        out = np.abs(x_arr) ** k * ratio_prime + k * np.sign(x_arr) * np.abs(x_arr) ** (k - 1) * num / den
        return _scalar_or_array(out, x)

    def params(self) -> dict[str, Any]:
        return {
            "numerator": self.numerator.tolist(),
            "denominator": self.denominator.tolist(),
            "abs_power": self.abs_power,
        }


class Gaussian(Profile):
    """amplitude · exp[−(x − center)² / (2 width²)]."""

    form = "gaussian"

    def __init__(self, amplitude: float, center: float, width: float):
        if not width > 0.0:
            raise ValueError("gaussian width must be positive")
        self.amplitude = float(amplitude)
        self.center = float(center)
        self.width = float(width)

    def value(self, x):
        z = (np.asarray(x, dtype=float) - self.center) / self.width
        return _scalar_or_array(self.amplitude * np.exp(-0.5 * z**2), x)

    def derivative(self, x):
        z = (np.asarray(x, dtype=float) - self.center) / self.width
        return _scalar_or_array(-self.amplitude * z / self.width * np.exp(-0.5 * z**2), x)

    def params(self) -> dict[str, Any]:
        return {"amplitude": self.amplitude, "center": self.center, "width": self.width}


class InverseSinh(Profile):
    """amplitude / sinh(x / scale), the thickness law of tunnel barriers."""

    form = "inverse_sinh"

    def __init__(self, amplitude: float, scale: float):
        if not scale > 0.0:
            raise ValueError("inverse_sinh scale must be positive")
        self.amplitude = float(amplitude)
        self.scale = float(scale)

    def value(self, x):
        return _scalar_or_array(self.amplitude / np.sinh(np.asarray(x, dtype=float) / self.scale), x)

    def derivative(self, x):
        u = np.asarray(x, dtype=float) / self.scale
        return _scalar_or_array(-self.amplitude * np.cosh(u) / (self.scale * np.sinh(u) ** 2), x)

    def params(self) -> dict[str, Any]:
        return {"amplitude": self.amplitude, "scale": self.scale}


class Tabulated(Profile):
    """Cubic spline through sampled (x, y) pairs."""

    form = "tabulated"

    def __init__(self, x: Sequence[float], y: Sequence[float]):
        x_arr = np.asarray(x, dtype=float)
        if x_arr.size < 4 or np.any(np.diff(x_arr) <= 0):
            raise ValueError("tabulated profile needs at least 4 strictly increasing nodes")
        self.x = x_arr
        self.y = np.asarray(y, dtype=float)
        self._spline = CubicSpline(self.x, self.y)
        self._slope = self._spline.derivative()

    @classmethod
    def sample(cls, fn, lo: float, hi: float, points: int = 2049) -> "Tabulated":
        grid = np.linspace(lo, hi, points)
        return cls(grid, np.asarray(fn(grid), dtype=float))

    def value(self, x):
        return _scalar_or_array(self._spline(x), x)

    def derivative(self, x):
        return _scalar_or_array(self._slope(x), x)

    def params(self) -> dict[str, Any]:
        return {"x": self.x.tolist(), "y": self.y.tolist()}


class SqrtProduct(Profile):
    """√(factor · f(x) · g(x)), e.g. the plasma frequency √(2E_J E_C)."""

    form = "sqrt_product"

    def __init__(self, factor: float, first: Profile, second: Profile):
        self.factor = float(factor)
        self.first = first
        self.second = second

    @classmethod
    def from_params(cls, params: dict[str, Any]) -> "SqrtProduct":
        return cls(
            float(params["factor"]),
            Profile.from_dict(params["first"]),
            Profile.from_dict(params["second"]),
        )

    def value(self, x):
        return _scalar_or_array(np.sqrt(self.factor * self.first.value(x) * self.second.value(x)), x)

    def derivative(self, x):
        f, g = self.first.value(x), self.second.value(x)
        df, dg = self.first.derivative(x), self.second.derivative(x)
        out = self.factor * (df * g + f * dg) / (2.0 * np.sqrt(self.factor * f * g))
        return _scalar_or_array(out, x)

    def params(self) -> dict[str, Any]:
        return {"factor": self.factor, "first": self.first.to_dict(), "second": self.second.to_dict()}


PROFILE_FORMS: dict[str, type[Profile]] = {
    cls.form: cls for cls in (Polynomial, Rational, Gaussian, InverseSinh, Tabulated, SqrtProduct)
}


def as_rational(profile: Profile) -> Rational | None:
    """Rational view of a polynomial or |x|-free rational profile, else None."""
    if isinstance(profile, Polynomial):
        return Rational.from_polynomial(profile)
    if isinstance(profile, Rational) and profile.abs_power == 0:
        return profile
    return None
