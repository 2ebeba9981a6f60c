#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "tsallisq/density.hpp"

namespace tsq {

struct ConditionalEntropyReport {
    double q;
    double value;             // S_q[B|A] (or [A|B] when conditioned_on == B)
    Subsystem conditioned_on;
    double s_joint;           // S_q of the composite state
    double s_marginal;        // S_q of the conditioning subsystem's reduced state
};

struct PptVerdict {
    double min_eigenvalue;  // smallest eigenvalue of the partial transpose
    bool positive;          // min_eigenvalue >= -eps_psd
};

struct PositivitySummary {
    long long n_samples;          // per arm
    std::uint64_t seed;
    std::vector<double> q_grid;
    double min_value;             // smallest conditional entropy observed
    long long violations;         // values below -1e-10
    std::optional<double> control_value;  // singlet S_1[B|A] when injected
};

namespace detail {
// Eigensolver output -> spectrum fit for entropy evaluation: reject anything
// below -eps_psd, zero values under a 32*machine-epsilon noise floor, clamp
// overshoots above 1, renormalize to unit sum. The renormalization is what
// makes pure states come out at exactly zero entropy for every q.
std::vector<double> clean_spectrum(std::vector<double> eigs);
}  // namespace detail

// S_q of a density matrix via its spectrum (basis-independent). Equals
// von_neumann within the eps_q window around q = 1; >= 0 always.
double quantum_tsallis(const DensityMatrix& rho, EntropicIndex q);
double von_neumann(const DensityMatrix& rho);

// q-conditional entropy S_q[B|A] = (S_q[A,B] - S_q[A]) / (1 + (1-q) S_q[A]),
// conditioning on `given`. Negative values witness entanglement; the report
// carries the joint and marginal entropies it was built from.
ConditionalEntropyReport conditional_quantum(const BipartiteState& s, EntropicIndex q,
                                             Subsystem given);

// Joint probability table p(a, b) = sum_l w_l p_l(a) r_l(b) induced by a
// shared-basis ensemble; rows index A.
JointDist ensemble_joint(const SeparableEnsemble& e);

// Conditional entropy of a separable ensemble through the classical
// q-expectation over p(a, b) — the closed form the shared local bases admit.
// Agrees with conditional_quantum of the assembled state.
double ensemble_conditional(const SeparableEnsemble& e, EntropicIndex q);

// Peres criterion: spectrum of the partial transpose over B.
PptVerdict ppt_test(const BipartiteState& s);

// Randomized check that separable states keep S_q[B|A] >= 0: n_samples
// shared-basis ensembles (evaluated by the ensemble closed form) plus
// n_samples general separable mixtures (evaluated spectrally), each swept
// over q_grid. Sample j draws from a fresh Sampler seeded base_seed + j,
// with the second arm occupying j in [n_samples, 2 n_samples). With
// inject_singlet_control, the singlet's S_1[B|A] = -ln 2 is evaluated and
// reported (not counted) as a should-fail control.
PositivitySummary separable_positivity_experiment(long long n_samples,
                                                  std::span<const double> q_grid,
                                                  std::uint64_t base_seed,
                                                  bool inject_singlet_control = false);

}  // namespace tsq
