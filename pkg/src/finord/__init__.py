"""Finite total orders, their Birkhoff-type dualities, and exhaustive law checks."""
from .core import (DYAD, EMPTY, PT, UNIV, CompositionError, DomainError,
                   HomPoset, MapLiteralError, MonMap, OrdError, Tag,
                   automorphisms, compose, enumerate_hom, format_map, hom_count,
                   hom_leq, hom_poset, identity, is_member, op_map, parse_map,
                   threshold)
from .duality import (FUNCTORS, FunctorSpec, adjoin_bottom, adjoin_bottom_t,
                      adjoin_top, adjoin_top_i, birkhoff_it, birkhoff_ord,
                      bracket, dual_i, dual_t, lad, rad)
from .algebra import (Fibration, act_contra_i, act_cov_t, fiber, glue,
                      join_it, join_it_map, osum, osum2_map, osum_map, pair_it,
                      sigma_act_i, sigma_act_t, sigma_pair)
from .laws import SUITES, LawReport, run_suite, run_suites

__version__ = "0.1.0"
