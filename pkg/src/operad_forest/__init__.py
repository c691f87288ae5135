"""Exact workbench for free tree algebras.

Enumeration, parsing and printing of the tree bases; the grafting,
root-graft, two-operation and associative products with exact scalars;
the embedding/symmetrization maps with rank-based injectivity
certificates; the red/black decomposition of rooted trees; and the
truncated dimension-series calculus for the splitting identities.
"""

from .exact import (LAMBDA, ONE_POLY, LambdaPoly, LinComb, MixedBasisError,
                    MixedScalarError, Rational, RationalMatrix, eval_lambda,
                    lincomb_add, lincomb_scale, lincomb_support, rank)
from .limits import ResourceBoundError
from .maps import (INJECTIVITY_MAPS, NotNormalizedError, NotTypeAError,
                   RankCertificate, TypeACertificate, commag_to_mag,
                   d_statistic, injectivity_certificate, is_type_A,
                   mag_basis_terms, mag_to_dend, normalize_commag, phi,
                   phi_tilde, psi, psi_inverse, type_a_certificate)
from .products import (LabelOverlapError, assoc_concat, assoc_sym,
                       dend_brace, dend_left, dend_recursive_image,
                       dend_right, dend_square, nap_product, pbt_generator,
                       prelie_product, root_degree_filtration, sharp)
from .redblack import (ColoredTree, Decomposition, DecompositionError,
                       color_edges, count_x_trees, decompose, is_x_tree,
                       reconstruct)
from .seriescalc import (EGS, OGS, DimSeries, PowerSeries, SeriesKindError,
                         assoc_series_ogs, catalan_series_ogs, commag_series,
                         dend_series_egs, dup_split_check, mag_series_ogs,
                         prelie_series, ps_compose, ps_reverse, x_dims,
                         y_closed_form_report, y_dims, z_dims)
from .treebases import (BinaryTerm, DuplicateLabelError, PBT_LEAF,
                        PlanarBinaryTree, RootedTree, TermError,
                        TermSyntaxError, Word, canonicalize, catalan,
                        double_factorial, enumerate_commag, enumerate_pbt,
                        enumerate_rooted_trees, format_term, is_normalized,
                        iter_rooted_trees, kind_of, parse_term, relabel)

__version__ = "0.1.0"
