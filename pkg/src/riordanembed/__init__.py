"""Exact computations with Riordan arrays, their embedded sub-arrays,
production matrices, continued fractions and moment matrices."""

from .cfrac import (JFraction, SFraction, contract_even, contract_odd, j_to_series,
                    jfraction_to_tridiagonal, s_to_series)
from .embedding import (CascadeNode, EmbeddingPair, cascade, decompose, embed, entry_identities,
                        interleave, split)
from .errors import (CompositionByUnit, DivisionByNonUnit, GFSyntaxError, InvariantViolation,
                     MalformedResponse, NetworkUnavailable, NoSquareRoot, NotEmbeddable,
                     NotReversible, NotUnitTriangular, OrderExceeded, RiordanError, ShapeMismatch,
                     SizeExceeded)
from .gfparse import evaluate, parse
from .orthopoly import (InterleavedFamily, Recurrence, interleaved_moment_matrix, moment_matrix,
                        polynomials)
from .prodmat import (BidiagonalSpec, ProductionMatrix, bidiagonal_construction, generate,
                      is_riordan_production, production_of)
from .riordan import RiordanArray, entry, identity, inverse, multiply, triangle
from .sequences import EventuallyPeriodic
from .series import Series, reversion
from .triangle import Triangle

__version__ = "0.1.0"
