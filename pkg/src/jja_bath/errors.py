"""Exception hierarchy shared by every jja_bath module."""

from typing import Optional


class BathError(Exception):
    """Base class for all jja_bath errors."""


class ConfigError(BathError, ValueError):
    """Invalid run configuration; carries the dotted field paths at fault."""

    def __init__(self, problems: dict[str, str]):
        self.problems = dict(problems)
        detail = "; ".join(f"{path}: {msg}" for path, msg in self.problems.items())
        super().__init__(f"Invalid configuration ({detail})")


class CutoffError(BathError, ValueError):
    """A basis cutoff is too small to represent the requested operator."""


class RegimeError(BathError, ValueError):
    """Input lies outside the physical regime an operation is defined for."""


class DecompositionError(BathError, ValueError):
    """A profile is not strictly monotonic on a declared interval."""

    def __init__(self, message: str, interval: Optional[tuple[float, float]] = None):
        self.interval = interval
        super().__init__(message)


class NumericalError(BathError, RuntimeError):
    """A numerical kernel failed to reach its requested accuracy."""

    def __init__(self, message: str, achieved: Optional[float] = None):
        self.achieved = achieved
        if achieved is not None:
            message = f"{message} (achieved abs error {achieved:.3e})"
        super().__init__(message)


class QuadratureError(NumericalError):
    pass


class IntegrationError(NumericalError):
    pass
