"""Finite lattices, their distributive envelopes, and dualities at desk scale."""
from .errors import (LatticeError, NotDaDLMorphism, NotAdjoint, NotALattice, NotAPoset,
                     NotDistributive, NotDistributiveCodomain, NotDoublyDense, NotTSCP,
                     ParseError, PreconditionViolated, SizeExceeded, TheoremViolation, Unbounded)
from .finlat import (FinLattice, LatticeMap, Poset, SubsetFamilyLattice, build_lattice,
                     enumerate_lattices, find_isomorphism, generated_sublattice, is_isomorphic,
                     prime_filter_poset)
from .admissible import aideal_generate, afilter_generate, is_join_admissible, is_meet_admissible
from .morphisms import classify_map, enumerate_maps
from .envelope import (DaDL, denv_join, denv_meet, denv_on_morphism, extend_map, galois_closed,
                       galois_pair)
from .duality import (Polarity, check_tscp, classical_duals, double_dual_check,
                      dual_adjoint_pair, dual_polarity, dual_tscp_morphism, free_dadl, is_tight,
                      modal_ops, validate_dadl)
from .pervin import bicompletion_points, blocks, is_block, pervin, symmetrize, verify_unifdual

__version__ = "0.1.0"
