"""Hardy Z-function laboratory.

Thin re-export of the C++ core: zeta/theta/omega kernels, the f_n/h_n/g_n
derivative families, Z^(n) evaluation, critical-line zero scans, interlacing
checks and argument-principle censuses.
"""

from ._core import (  # noqa: F401
    BoundaryTooClose,
    CountReport,
    DomainViolation,
    FitAmbiguous,
    GapRecord,
    InterlaceReport,
    NearZeroDenominator,
    PoleError,
    PoleProximity,
    PrecisionConfig,
    PrecisionExhausted,
    RealityCheckFailed,
    UnstableScan,
    WindingUnresolved,
    ZeroRecord,
    __version__,
    a_coeffs,
    chi,
    count_zeros,
    digamma,
    f,
    g,
    h,
    interlace_check,
    log_gamma,
    negative_fraction,
    omega,
    pole_order,
    ratio_identity_residual,
    ratio_monotonicity_probe,
    scan_zeros,
    theta,
    winding_count,
    z,
    z_checked,
    zeta,
    zeta_jet,
)
