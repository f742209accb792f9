"""Exact ramification data, embedding criteria, and genus bounds for
quaternion and symbol algebras over Q, F_p(x), and Q(x)."""

from .brauerq import (
    QuadraticField,
    QuaternionQ,
    RamificationSet,
    distinguishing_field,
    embeds,
    enumerate_unramified,
    is_division,
    is_isomorphic,
    ramification_set,
)
from .elliptic import (
    ExceptionalSet,
    GenusBoundReport,
    WeierstrassCurve,
    build_S,
    cubic_discriminant,
    elliptic_genus_bound,
    s_unit_square_classes,
)
from .errors import (
    ParseError,
    RamgenusError,
    SplitAlgebraError,
    UnsupportedFieldError,
    WitnessSearchExhausted,
    ZeroValuationError,
)
from .exactarith import (
    PrimeFactorization,
    euler_phi,
    factor,
    is_prime,
    jacobi,
    legendre,
    valuation,
)
from .funcfield import (
    FFGenusBound,
    FFPlace,
    RationalFunction,
    SymbolAlgebraFF,
    TameResidue,
    genus_bound,
    places_of,
    ram_V,
    ram_V_over_Q,
    tame_residue,
)
from .gfpoly import PolyFp, is_square_fq, poly_factor_fp
from .localsymbols import (
    REAL_PLACE,
    LocalInvariant,
    LocalSquareClass,
    PlaceQ,
    hilbert,
    hilbert_oracle,
    invariant,
    square_class,
)
from .qpoly import PolyQ

__all__ = [
    "ExceptionalSet",
    "FFGenusBound",
    "FFPlace",
    "GenusBoundReport",
    "LocalInvariant",
    "LocalSquareClass",
    "ParseError",
    "PlaceQ",
    "PolyFp",
    "PolyQ",
    "PrimeFactorization",
    "QuadraticField",
    "QuaternionQ",
    "RamgenusError",
    "RamificationSet",
    "RationalFunction",
    "REAL_PLACE",
    "SplitAlgebraError",
    "SymbolAlgebraFF",
    "TameResidue",
    "UnsupportedFieldError",
    "WeierstrassCurve",
    "WitnessSearchExhausted",
    "ZeroValuationError",
    "build_S",
    "cubic_discriminant",
    "distinguishing_field",
    "elliptic_genus_bound",
    "embeds",
    "enumerate_unramified",
    "euler_phi",
    "factor",
    "genus_bound",
    "hilbert",
    "hilbert_oracle",
    "invariant",
    "is_division",
    "is_isomorphic",
    "is_prime",
    "is_square_fq",
    "jacobi",
    "legendre",
    "places_of",
    "poly_factor_fp",
    "ram_V",
    "ram_V_over_Q",
    "ramification_set",
    "s_unit_square_classes",
    "square_class",
    "tame_residue",
    "valuation",
]
