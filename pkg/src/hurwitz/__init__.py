"""Exact Hurwitz and Schur stability tests for real polynomials."""

__version__ = "0.1.0"

from .polynomials import (  # noqa: E402
    ExactComplex,
    Polynomial,
    even_part,
    has_positive_coefficients,
    is_real,
    odd_part,
    poly_divmod,
)
from .rational_functions import (  # noqa: E402
    PoleError,
    RationalFunction,
    SampleConfig,
    is_odd,
    is_positive_sampled,
    make,
    w_transform,
)
from .root_oracle import (  # noqa: E402
    IndeterminateError,
    find_roots,
    is_hurwitz_oracle,
    is_schur_oracle,
    max_real_part,
)
from .stability import (  # noqa: E402
    BoundaryGrid,
    CauerExpansion,
    LCLadder,
    Verdict,
    bilinear_substitute,
    cauer_expansion,
    hurwitz_by_reactance,
    is_reactance,
    ladder_to_impedance,
    routh_array,
    schur_stable_via_bilinear,
    synthesize_lc_ladder,
    theorem2_check,
)
