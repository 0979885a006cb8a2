"""Monoids of projective modules over locally semiperfect orders, from profile data."""

from .extnat import INF, ExtNat, dot, ext
from .profile import AlgebraProfile, Block, ProfileError, is_degenerate, validate
from .traces import TraceIdeal, enumerate_traces, full_trace, minimal_traces, quotient_profile, trace_sum
from .diophantine import DiophantineSystem, minimal_solutions
from .genus import (
    GenusVector,
    big_generators,
    block_ranks,
    hilbert_basis_A,
    membership_A,
    membership_B,
    parse_genus,
    rank_monoid,
    rank_monoid_contains,
    verify_big_generators,
    verify_hilbert_basis,
)
from .bigmonoid import Big, Fin, from_genus, to_genus
from .decomp import (
    CongruenceObstruction,
    Witness,
    coprime_criterion,
    decide_all_fg,
    decompose_big,
    lemma_equations_solvable,
)
from .order import (
    OrderSpec,
    build,
    lambda_membership,
    order_to_profile_block,
    profile_from_orders,
    residue_structure_check,
    verify_relations,
)

__version__ = "0.1.0"
