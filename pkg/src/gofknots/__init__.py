"""Genus one fibered knots in lens spaces: braid monodromies, Baker's
classification, GL(2,Z) conjugacy and left-orderability of integral surgeries."""

from .baker import GofKnot, classify, family_matrix, knot_from_braid, make_knot, table1
from .braid3 import BraidWord, monodromy, parse
from .errors import GofError, ParseError
from .lens import LensSpace, normalize
from .mat2 import Matrix2, conjugate_gl2, conjugate_sl2, rl_class
from .verdict import all_integral_lo, lo_family_membership, monodromy_class, surgery_verdict

__version__ = "0.1.0"
