"""Growth of finitely presented graded algebras: normal forms, Hilbert
series, enveloping-algebra dimensions and Veronese quadratizations."""

from .core import Alphabet, Generator, MonomialOrder, NcPoly, compare, is_homogeneous, word_degree
from .growth import (
    DimensionSeries,
    GrowthClass,
    brute_force_counts,
    classify_growth,
    cumulative,
    kobayashi_closed_form,
    normal_word_counts,
    partition_p,
)
from .presentation import Presentation, load_presentation, parse_presentation
from .rewrite import RewriteRule, RewriteSystem, ambiguities, complete, orient, reduce

__version__ = "0.1.0"
