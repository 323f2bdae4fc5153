"""
Exact arithmetic, polynomial algebra and determinant machinery.
"""

from .rational import Rational, Interval, parse_rational, format_rational, to_rational
from .polynomial import UniPoly
from .multipoly import MultiPoly, exact_divide
from .determinant import det, det_bareiss, det_cofactor, wronskian, wronskian_matrix
from .sturm import RootCount, sturm_root_count, sturm_sequence, sign_variations
from .jet import Jet, Jet2, extended_context, to_mpf, evaluate_on_jet, evaluate_numeric

__all__ = [
    'Rational', 'Interval', 'parse_rational', 'format_rational', 'to_rational',
    'UniPoly',
    'MultiPoly', 'exact_divide',
    'det', 'det_bareiss', 'det_cofactor', 'wronskian', 'wronskian_matrix',
    'RootCount', 'sturm_root_count', 'sturm_sequence', 'sign_variations',
    'Jet', 'Jet2', 'extended_context', 'to_mpf', 'evaluate_on_jet', 'evaluate_numeric',
]
