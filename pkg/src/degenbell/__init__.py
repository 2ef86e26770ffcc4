"""Exact computation of classical, degenerate and r-extended Stirling numbers
of the second kind and their Bell polynomials, with a grid-driven verifier
that checks every identity through independent evaluation paths.
"""

from .classical import (
    ORACLE_MAX_ELEMENTS,
    ORACLE_MAX_R,
    StirlingKind,
    StirlingTriangle,
    X,
    XPolynomial,
    bell_poly,
    falling_factorial_poly,
    forward_diff,
    oracle_partitions,
    r_s2,
    restricted_partitions,
    s1,
    s2,
)
from .degenerate import (
    DegBellPolynomial,
    DegStirlingValue,
    ExtMethod,
    bell_deg_poly,
    bell_ext_poly,
    bell_series_eval,
    deg_falling,
    dobinski_direct,
    dobinski_numeric,
    s2_deg,
    s2_deg_closed,
    s2_ext,
)
from .scalars import (
    LAMBDA,
    NEG_INF,
    LambdaPoly,
    Rational,
    ScalarRing,
    SYMBOLIC,
    fixed_ring,
    parse_rational,
    poly_degree,
    poly_eval,
    rat_normalize,
    scalar_to_jsonable,
)
from .series import (
    TruncatedSeries,
    deg_exp,
    ps_binom_lambda,
    ps_dlog,
    ps_egf_coeff,
    ps_exp,
    ps_mul,
    ps_pow,
)
from .verifier import (
    DEFAULT_GRID,
    GRID_CAP,
    GridSpec,
    IdentityId,
    NUMERIC_IDS,
    VerificationReport,
    list_identities,
    run_suite,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_GRID",
    "DegBellPolynomial",
    "DegStirlingValue",
    "ExtMethod",
    "GRID_CAP",
    "GridSpec",
    "IdentityId",
    "LAMBDA",
    "LambdaPoly",
    "NEG_INF",
    "NUMERIC_IDS",
    "ORACLE_MAX_ELEMENTS",
    "ORACLE_MAX_R",
    "Rational",
    "ScalarRing",
    "StirlingKind",
    "StirlingTriangle",
    "SYMBOLIC",
    "TruncatedSeries",
    "VerificationReport",
    "X",
    "XPolynomial",
    "bell_deg_poly",
    "bell_ext_poly",
    "bell_poly",
    "bell_series_eval",
    "deg_exp",
    "deg_falling",
    "dobinski_direct",
    "dobinski_numeric",
    "falling_factorial_poly",
    "fixed_ring",
    "forward_diff",
    "list_identities",
    "oracle_partitions",
    "parse_rational",
    "poly_degree",
    "poly_eval",
    "ps_binom_lambda",
    "ps_dlog",
    "ps_egf_coeff",
    "ps_exp",
    "ps_mul",
    "ps_pow",
    "r_s2",
    "rat_normalize",
    "restricted_partitions",
    "run_suite",
    "s1",
    "s2",
    "s2_deg",
    "s2_deg_closed",
    "s2_ext",
    "scalar_to_jsonable",
    "verify_identity",
]
