"""Exact computations around plethysms, symmetric Kronecker coefficients,
monoid saturation and the holes of the Chow variety's monoid of
representations."""
from .characters import character, inner_product, mn_character, square_class
from .chow import (
    alon_tarsi_delta,
    bound_D,
    chow3_hole_scan,
    in_S_normalization,
    infinite_family_check,
    normalization_mult,
)
from .errors import GuardError, IntegralityError
from .kronecker import in_S_o_det, kron, sym_kron
from .monoid import FGMonoid, MembershipOracle, holes_in_box, in_cone, in_group, in_saturation, min_stretch
from .obstructions import det3_gap_scan, padded_filter, problem1_scan
from .partitions import (
    add_to_first_row,
    conjugate,
    cut_columns,
    enumerate_partitions,
    lambda_of_lemma,
    rectangle,
    z_of,
)
from .plethysm import brute_force_mult, h_in_p, h_plethysm_h, mult_sym_sym, schur_mult

__version__ = "0.1.0"
