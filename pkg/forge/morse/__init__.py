from forge.morse.vector_field import (
    AcyclicityReport,
    DiscreteVectorField,
    DvfReport,
    GradientPath,
    Violation,
    acyclicity,
    apex_matching,
    check_dvf,
)
from forge.morse.step_matching import (
    INFINITY,
    MatchingAssertionError,
    MatchingResult,
    StepAddress,
    StepMatching,
    a_value,
    pi_monotonicity,
    pi_tuple,
    step_addresses,
    step_matching,
    verify_matching,
)
from forge.morse.certificate import CertificateError, ConnectivityCertificate, connectivity_certificate
