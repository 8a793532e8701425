"""Exact combinatorics of composition factors and homology bounds over Weyl groups.

The package computes, entirely in integer/rational arithmetic:

* finite root data from Cartan matrices (:mod:`steinmult.root_datum`);
* Weyl groups with Bruhat order, canonical words, and parabolic
  decompositions (:mod:`steinmult.weyl`);
* Kazhdan-Lusztig polynomials by two independent routes, and the derived
  standard-module multiplicities (:mod:`steinmult.kl`);
* composition-factor tables of twisted Steinberg modules
  (:mod:`steinmult.steinberg_jh`);
* chamber index sets, stratification data, chain complexes, and
  interval bounds on homology multiplicities
  (:mod:`steinmult.period_domain`);
* a command-line interface (:mod:`steinmult.cli`, entry point
  ``steinmult``).
"""

from .root_datum import (
    BUILTIN_TYPES,
    CartanType,
    ChamberReport,
    Coweight,
    DomainError,
    RootDatum,
    Weight,
    build_root_datum,
    cartan_type,
    cartan_type_from_file,
    cartan_type_from_matrix,
    coweight_from_gln,
    fundamental_coweights,
    pairing,
    type_a,
    validate_mu_positive_chamber,
    weight_from_fundamental,
    weight_to_fundamental,
)
from .weyl import WeylElement, WeylGroup, WordParseError
from .kl import (
    KLPolynomial,
    kl_by_inversion,
    kl_polynomial,
    mu_coefficient,
    r_polynomial,
    verma_multiplicity,
)
from .steinberg_jh import (
    FactorTable,
    JHFactor,
    jh_factors,
    jh_multiplicity,
    jh_multiplicity_oracle,
    parabolic_label,
)
from .period_domain import (
    ChainComplexSpec,
    DistributionType,
    DoubleComplexLayout,
    HomologyEntry,
    HomologyReport,
    InfeasibleError,
    OmegaSet,
    ParabolicComplexLayout,
    SolverResult,
    YSpaceStructure,
    build_complex,
    distribution_types,
    double_complex_layout,
    homology_bounds,
    omega,
    parabolic_complex_layout,
    solve_multiplicity_intervals,
    y_structure,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_TYPES",
    "CartanType",
    "ChamberReport",
    "ChainComplexSpec",
    "Coweight",
    "DistributionType",
    "DomainError",
    "DoubleComplexLayout",
    "FactorTable",
    "HomologyEntry",
    "HomologyReport",
    "InfeasibleError",
    "JHFactor",
    "KLPolynomial",
    "OmegaSet",
    "ParabolicComplexLayout",
    "RootDatum",
    "SolverResult",
    "Weight",
    "WeylElement",
    "WeylGroup",
    "WordParseError",
    "YSpaceStructure",
    "build_complex",
    "build_root_datum",
    "cartan_type",
    "cartan_type_from_file",
    "cartan_type_from_matrix",
    "coweight_from_gln",
    "distribution_types",
    "double_complex_layout",
    "fundamental_coweights",
    "homology_bounds",
    "jh_factors",
    "jh_multiplicity",
    "jh_multiplicity_oracle",
    "kl_by_inversion",
    "kl_polynomial",
    "mu_coefficient",
    "omega",
    "pairing",
    "parabolic_complex_layout",
    "parabolic_label",
    "r_polynomial",
    "solve_multiplicity_intervals",
    "type_a",
    "validate_mu_positive_chamber",
    "verma_multiplicity",
    "weight_from_fundamental",
    "weight_to_fundamental",
    "y_structure",
]
