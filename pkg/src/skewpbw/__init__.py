"""Exact desk-scale computations in skew PBW extensions over finite rings."""

__version__ = "0.1.0"

from .annihilators import (AnnBasis, DegreeBounds, ac_verify_witness, ac_witness_search,  # noqa: E402
                           annihilator_oracle_enum, bounded_left_annihilator, bounded_right_annihilator,
                           check_quasi_armendariz, check_sa1)
from .catalog import build_catalog_example, catalog_instance  # noqa: E402
from .engine import (ExtensionSpec, Relation, SkewPoly, expand_monomial_scalar, leading_data,  # noqa: E402
                     monomial_product, poly_multiply, scalar_commutation, validate_extension)
from .finring import (FiniteRing, RingSubset, build_ring, classify_ring, nil_structure,  # noqa: E402
                      ring_ac_exact, validate_ring_axioms)
from .ringmaps import (RingMap, SigmaDerivation, check_compatibility,  # noqa: E402
                       validate_endomorphism, validate_sigma_derivation)
from .report import emit_report, run_scenario  # noqa: E402
from .scenario import emit_scenario, parse_scenario  # noqa: E402
from .theorems import run_theorem_suite  # noqa: E402

__all__ = [
    "AnnBasis", "DegreeBounds", "ExtensionSpec", "FiniteRing", "Relation", "RingMap", "RingSubset",
    "SigmaDerivation", "SkewPoly", "ac_verify_witness", "ac_witness_search", "annihilator_oracle_enum",
    "bounded_left_annihilator", "bounded_right_annihilator", "build_catalog_example", "build_ring",
    "catalog_instance", "check_compatibility", "check_quasi_armendariz", "check_sa1", "classify_ring",
    "emit_report", "emit_scenario", "expand_monomial_scalar", "leading_data", "monomial_product", "nil_structure",
    "parse_scenario", "poly_multiply", "ring_ac_exact", "run_scenario", "run_theorem_suite",
    "scalar_commutation", "validate_endomorphism", "validate_extension", "validate_ring_axioms",
    "validate_sigma_derivation",
]
