"""Tsallis entropies, q-conditional entropy, and entanglement detection."""

from tsallisq._core import (
    AxiomReport,
    BipartiteState,
    ConditionalEntropyReport,
    CriterionTable,
    DensityMatrix,
    PositivitySummary,
    PptVerdict,
    SeparableEnsemble,
    ThresholdPoint,
    ValidationError,
    assemble_separable,
    compose_pseudoadditive,
    conditional_dist,
    conditional_quantum,
    conditional_tsallis,
    conditional_via_ratio,
    criterion_table,
    default_q_grid,
    eigenvalues_descending,
    ensemble_conditional,
    log_spaced_q_grid,
    marginal_a,
    marginal_b,
    partial_trace,
    partial_transpose,
    ppt_test,
    quantum_tsallis,
    run_axiom_suite,
    separable_positivity_experiment,
    shannon_entropy,
    singlet_projector,
    tensor,
    threshold,
    threshold_scan,
    tsallis_entropy,
    von_neumann,
    werner_cond_entropy,
    werner_popescu,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "BipartiteState",
    "ConditionalEntropyReport",
    "CriterionTable",
    "DensityMatrix",
    "PositivitySummary",
    "PptVerdict",
    "SeparableEnsemble",
    "ThresholdPoint",
    "ValidationError",
    "assemble_separable",
    "compose_pseudoadditive",
    "conditional_dist",
    "conditional_quantum",
    "conditional_tsallis",
    "conditional_via_ratio",
    "criterion_table",
    "default_q_grid",
    "eigenvalues_descending",
    "ensemble_conditional",
    "log_spaced_q_grid",
    "marginal_a",
    "marginal_b",
    "partial_trace",
    "partial_transpose",
    "ppt_test",
    "quantum_tsallis",
    "run_axiom_suite",
    "separable_positivity_experiment",
    "shannon_entropy",
    "singlet_projector",
    "tensor",
    "threshold",
    "threshold_scan",
    "tsallis_entropy",
    "von_neumann",
    "werner_cond_entropy",
    "werner_popescu",
]
