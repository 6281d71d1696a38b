"""Averaging operators on truncated power series, mixed norms on the disc,
Carleson-type measure diagnostics, and an empirical boundedness lab."""

from .errors import DomainError, QuadratureError
from .series import (DEFAULT_TRUNCATION, PowerSeries, cauchy_product,
                     derivative_D, dilate, evaluate, frac_derivative,
                     frac_integral, gamma_ratio, hadamard, make_kernel_G,
                     make_kernel_K, monomial, shift_S, unit_series)
from .quadrature import (certified_endpoint_integral, endpoint_rule,
                         moment_sums, scaled_endpoint_rule)
from .measures import (INFINITE_EXPONENT, AtomicMeasure, CarlesonCheck,
                       DensityMeasure, ExponentFit, MomentSequence,
                       RadialMeasure, carleson_exponent, is_s_carleson,
                       parse_measure, poisson_integral, zoo)
from .operators import (IDENTITY_NAMES, CesaroParams, IdentityReport,
                        andersen_cbeta, apply_cesaro, apply_cesaro_integral_at,
                        d_alpha_f_mu, f_mu, verify_identity)
from .norms import (MembershipReport, MixedNormParams, NormResult,
                    WeightedMomentResult, conjugate_exponent, dyadic_blocks,
                    growth_exponent, hardy_norm, integral_mean, kellogg_norm,
                    membership_classify, mixed_norm, weighted_moment_lq)
from .lab import (RELEASED_GRID, BoundednessVerdict, CrosscheckReport, LabCase,
                  MeanwiseReport, MonomialProbeReport, PredictedVerdict,
                  ProbeResult, SpacePair, bergman_space, boundedness_verdict,
                  evaluate_case, fmu_membership_crosscheck,
                  mainprop_meanwise_check, monomial_lower_bound_probe, predict,
                  predict_bergman, probe, released_grid, test_family)
from .reports import (SCHEMA, ScanConfig, canonical_json, emit,
                      identity_suite_report, run_scan)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
