"""Exact Bott localization sums for circle actions with isolated fixed points."""

__version__ = "0.1.0"

from .exact import (NOT_LAURENT, LaurentPolynomial, Rational, RationalFunction, as_laurent,
                    rational_arith, ratfun_sum)
from .generators import constant_lift, cpn, product
from .genus import dolbeault_character, todd_genus
from .injectivity import (UNDERDETERMINED, Classification, LevelDecomposition, Status,
                          TheoremReport, aggregate_levels, classify, theorem_report,
                          vandermonde_reconstruct)
from .io import parse_profile, serialize_profile
from .localize import (ConsistencyReport, DegreeMismatch, chern_top, consistency_check,
                       localize_symmetric, power_sum)
from .profile import (ALMOST_COMPLEX, ORIENTED, BundleFiberData, FixedPointProfile,
                      FlavorError, InvalidProfile, PointDatum, SymmetricPolynomial,
                      canonicalize, determinant_lift, relift, validate)
from .search import SearchSpec, brute_force_enumerate, catalog_audit, enumerate_consistent
