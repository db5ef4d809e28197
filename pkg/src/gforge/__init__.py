"""gforge: an exact-arithmetic toolkit for constructive Galois theory.

Capabilities: exact fields (Q, GF(p), GF(p^k)) and polynomial arithmetic
with factorization; specialization reports for one-parameter families;
Galois group certification (cubic classification, symmetric-group
certificates from reduction cycle types); trinomial constructions and an
interpolation-based family builder that emits independently verifiable
certificates; twisted (Ore) polynomial rings with Euclidean division and
common-multiple witnesses; and a small permutation-group normalizer
calculus.  Everything is exact: no floating point anywhere.
"""

__version__ = "0.1.0"

from .certify import (GroupCertificate, certify_sn, cubic_galois_group,
                      cubic_stem_field_root_count, cycle_type,
                      reverify_sn_certificate)
from .construct import (BBBudgets, BBCertificate, BBChecks, BBVerification,
                        SplitTrinomialResult, bb_construct,
                        build_padded_fibers, certificate_from_dict,
                        certificate_to_dict, lp_trinomial, lp_trinomial_data,
                        search_sn_polynomial, split_trinomial,
                        split_trinomial_from_alpha,
                        stem_fields_distinct_necessary, verify_bb_certificate)
from .errors import GForgeError
from .factorization import factor, is_irreducible, is_separable
from .fields import GF, FieldElem, FieldSpec, field_from_string, rationals
from .grammar import (parse_elem, parse_parampoly, parse_quaternion,
                      parse_skew, parse_skew_ring, parse_unipoly, print_elem,
                      print_parampoly, print_quaternion, print_skew,
                      print_unipoly)
from .parampoly import (ParamPoly, discriminant_y,
                        lagrange_interpolate_coeffwise)
from .permgroup import (PermGroup, all_subgroups, degree_bookkeeping,
                        from_cycles, normalizer, normalizer_quotient,
                        parse_perm, print_perm)
from .quaternions import Quaternion, QuaternionAlgebra, quaternion_algebra
from .resultants import discriminant, resultant
from .skew import (SkewPoly, SkewRing, center_test, left_divide, ore_witness,
                   right_divide, skew_mul)
from .specialization import (SpecializationReport, frobenius_decomposition,
                             specialize_at, unramified_at)
from .unipoly import UniPoly
