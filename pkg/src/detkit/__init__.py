"""detkit: exact-arithmetic verification of closed-form determinant identities."""

from .exactnum import PolyQ, Rational, RatFn, TruncSeries, rat
from .linalg import MatrixR, char_poly, det, permanent, pfaffian
from .hankel import (JFraction, MomentSeq, hankel_det, hankel_matrix,
                     heilermann_product, jfraction_from_moments)
from .catalog import (build_matrix, closed_form, get_record, registry_ids,
                      verify_identity)

__version__ = "0.1.0"

__all__ = [
    "PolyQ", "Rational", "RatFn", "TruncSeries", "rat",
    "MatrixR", "char_poly", "det", "permanent", "pfaffian",
    "JFraction", "MomentSeq", "hankel_det", "hankel_matrix",
    "heilermann_product", "jfraction_from_moments",
    "build_matrix", "closed_form", "get_record", "registry_ids",
    "verify_identity",
]
