"""Exception hierarchy shared by all modules."""


class MLCardioidError(Exception):
    """Base class for every error raised by this package."""


class ParamError(MLCardioidError, ValueError):
    """A parameter lies outside the admissible range."""


class PoleError(MLCardioidError, ValueError):
    """Gamma was evaluated at (or numerically on) a non-positive integer."""


class ConvergenceError(MLCardioidError, ArithmeticError):
    """A series did not meet its stopping criterion within the term budget."""


class ClassError(MLCardioidError, ValueError):
    """A series is not normalized as z + a_2 z^2 + ... ."""


class BoundaryAmbiguous(MLCardioidError):
    """A query point is too close to the sampled cardioid boundary to decide."""

    def __init__(self, w, distance):
        super().__init__(f"point {w!r} lies {distance:.3e} from the sampled boundary")
        self.w = w
        self.distance = distance


class DenominatorZero(MLCardioidError, ArithmeticError):
    """The integral factor of a dominant vanished at the requested point."""

    def __init__(self, z):
        super().__init__(f"dominant denominator vanishes near z={z!r}")
        self.z = z


class SingularDenominator(MLCardioidError, ArithmeticError):
    """eta*q + mu vanished, so the Briot-Bouquet expression is undefined."""

    def __init__(self, z):
        super().__init__(f"eta*q(z) + mu vanishes near z={z!r}")
        self.z = z


class HypothesisError(MLCardioidError):
    """The requested theorem does not apply to these parameters."""
