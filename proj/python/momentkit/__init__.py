"""Truncated moment problems on finitely generated polynomial algebras.

Moment and localizing matrices with PSD checks, growth seminorm estimates
from truncated data, 1D atomic measure recovery, support localization
bounds, and cone positivity certificates with machine-checkable output.
"""

from ._core import (
    Atom,
    AtomicMeasure,
    BallCheckReport,
    BallViolation,
    BasisKind,
    BinomialGenerator,
    Certificate,
    CertificateEntry,
    CertificateSearch,
    ConeCheckReport,
    ConeViolation,
    CounterexampleResult,
    GeneratorBasis,
    GeneratorTerm,
    HankelPsdReport,
    MomentkitError,
    MomentMatrix,
    MomentSequence,
    Polynomial,
    PsdReport,
    RatioRootAgreement,
    Recovered1D,
    RecoveredAtom,
    RecoveryReport,
    Region,
    SeminormLawEntry,
    SeminormLawReport,
    Sequence1D,
    VerifyResult,
    VnormEstimate,
    VnormKind,
    atom_max,
    binomial_product,
    check_ball_criterion,
    check_binomial_cone,
    check_ratio_root_agreement,
    check_seminorm_laws,
    counterexample_search,
    enumerate_basis,
    enumerate_binomial_basis,
    eval_functional,
    find_certificate,
    generate_fixture_json,
    interval_bound,
    is_psd,
    is_psd_on_n0,
    marginal,
    moment_matrix,
    moments_from_measure,
    monomial_basis,
    recover_atoms,
    run_cli,
    support_radius,
    verify_certificate,
    verify_recovery,
    vnorm_ratio,
    vnorm_root,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
