"""Mittag-Leffler convolution operator, cardioid domain and Briot-Bouquet dominants."""

from .bounds import BoundQuery, effective_exponent, extremal_series_value, sharp_bound, sharp_bound_root
from .briot_bouquet import (
    DominantSpec,
    big_h,
    dominant,
    exp_poly_coeffs,
    lemma22_dominant,
    ode_residual,
    p_condition_margin,
)
from .cardioid import CardioidRegion, contains, hc, is_subordinate_to_cardioid, min_real_on_circle, quartic_value
from .errors import (
    BoundaryAmbiguous,
    ClassError,
    ConvergenceError,
    DenominatorZero,
    HypothesisError,
    MLCardioidError,
    ParamError,
    PoleError,
    SingularDenominator,
)
from .powerseries import PowerSeries, evaluate
from .report import VerificationReport
from .series import apply_operator, bernardi, hadamard, identity_residual, z_times_derivative
from .special import MLParams, gamma, mittag_leffler, normalized_ml_series, pochhammer
from .verify import make_schwarz, randomized_sweep, verify_dominant_theorem, verify_re_part_theorem

__version__ = "0.1.0"
