"""Exact obstructions to chirally cosmetic Dehn surgeries on knots."""

from .slopes import Rational, Slope, SlopePair, distance, mirror, parse_slope, reduce
from .dedekind import a2_required_by_surgery, dedekind_sum, s1_closed_form, s2_closed_form
from .alexander import (GapSequence, LaurentPolynomial, a2, a2_from_gaps,
                        check_claim_bound, lspace_gaps, second_derivative_at_one)
from .homology import AbelianGroup, smith_normal_form
from .seifert import (SeifertData, h1_exterior, h1_filled, normalize_closed_sfs,
                      remark_slopes, sfs_chiral_compare, thm2_solve)
from .obstructions import (cor6_classify, p7_family_distances, thm1_candidate_ps,
                           thm1_check, thm3_enumerate)
from .catalog import (bundled_catalog, chirally_cosmetic_candidates, load_catalog,
                      thm4_pipeline)

__version__ = "0.1.0"
