"""Coefficient bounds for analytic functions with ``omega(0) = 0`` and ``|omega'| <= 1``."""

from .bounds import (
    BoundValue,
    DomainError,
    FunctionalSpec,
    bound_lemma1,
    bound_lemma2,
    bound_th1,
    bound_th2,
    bound_th3,
    bound_th4,
    bound_th5,
    functional_value,
    operative_bound,
)
from .extremals import Extremal, extremal_coeffs, extremal_via_series, witness_params
from .optimizer import OptConfig, OptReport, maximize, sweep
from .power_series import Series
from .schur import (
    OmegaCoeffs,
    SchurParams,
    b0_from_schur,
    omega_from_schur,
    sample_params,
    schur_eval,
    schur_to_series,
    series_to_schur,
)
from .soundness import soundness_sweep

__version__ = "0.1.0"
