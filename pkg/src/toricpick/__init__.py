"""Exact lattice point, signature and characteristic number identities for
Delzant polytopes, computed by fixed point localization over the rationals."""

from .agw import (PontryaginPoly, RootPoly, expand_genus_product,
                  pontryagin_label, to_pontryagin, twisted_ahat, verify_agw)
from .cli import dump_polytope, format_rational, load_polytope, main
from .errors import (DimensionError, GenericityError, InputError,
                     NotSimpleError, NotUnimodularError, ParityError,
                     RouteDisagreementError, ShapeError, SingularSystemError,
                     ToricError, UnboundedError)
from .exact import IntMatrix, Rational, det, integer_kernel_basis, \
    inverse_unimodular, solve_rational
from .invariants import (Report, check_face_todd, check_pick,
                         check_tetrahedron, check_todd,
                         check_untwisted_signature, kahler_class,
                         twisted_signature, twisted_todd,
                         volume_by_localization)
from .lattice import (FaceCounts, count_points, pick_rhs_3d,
                      weighted_sum_closed, weighted_sum_relint)
from .localization import (GenericVector, assert_generic, chern_number,
                           check_partition, choose_generic,
                           fixed_point_partition_sum, gysin_power,
                           gysin_power_v3, integrate_monomial, integrate_poly,
                           partitions_of)
from .polytope import (DelzantVerdict, Face, FaceLattice, HPolytope, HVector,
                       VertexChart, enumerate_vertices, face_lattice,
                       h_vector, induce_face_polytope, is_delzant,
                       signature_from_h, unimodular_transform, validate,
                       volume)
from .series import (MultiPoly, UniSeries, elementary_symmetric, exp_linear,
                     genus_series, product_over_facets)

__version__ = "0.1.0"
