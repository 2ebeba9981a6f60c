#include "tsallisq/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tsallisq/sampling.hpp"

namespace tsq {

namespace detail {

std::vector<double> clean_spectrum(std::vector<double> eigs) {
    constexpr double noise_floor = 32.0 * std::numeric_limits<double>::epsilon();
    double sum = 0.0;
    for (double& v : eigs) {
        if (v < -eps_psd)
            throw validation_error("spectrum has eigenvalue " + std::to_string(v) +
                                   " below -" + std::to_string(eps_psd));
        if (v < noise_floor)
            v = 0.0;
        else if (v > 1.0)
            v = 1.0;
        sum += v;
    }
    if (sum <= 0.0) throw validation_error("spectrum has no weight above the noise floor");
    for (double& v : eigs) v /= sum;
    return eigs;
}

}  // namespace detail

double quantum_tsallis(const DensityMatrix& rho, EntropicIndex q) {
    return detail::tsallis(detail::clean_spectrum(rho.spectrum()), q.value());
}

double von_neumann(const DensityMatrix& rho) {
    return detail::shannon(detail::clean_spectrum(rho.spectrum()));
}

ConditionalEntropyReport conditional_quantum(const BipartiteState& s, EntropicIndex q,
                                             Subsystem given) {
    const std::vector<double> joint = detail::clean_spectrum(s.rho().spectrum());
    const Subsystem traced = given == Subsystem::A ? Subsystem::B : Subsystem::A;
    const std::vector<double> marg = detail::clean_spectrum(partial_trace(s, traced).spectrum());
    ConditionalEntropyReport r;
    r.q = q.value();
    r.conditioned_on = given;
    r.value = detail::conditional_ratio(joint, marg, q.value());
    r.s_joint = detail::tsallis(joint, q.value());
    r.s_marginal = detail::tsallis(marg, q.value());
    return r;
}

JointDist ensemble_joint(const SeparableEnsemble& e) {
    const std::size_t da = static_cast<std::size_t>(e.dim_a());
    const std::size_t db = static_cast<std::size_t>(e.dim_b());
    std::vector<double> flat(da * db, 0.0);
    for (std::size_t l = 0; l < e.terms(); ++l) {
        const double w = e.weights()[l];
        const ProbDist& pa = e.dists_a()[l];
        const ProbDist& pb = e.dists_b()[l];
        for (std::size_t a = 0; a < da; ++a)
            for (std::size_t b = 0; b < db; ++b) flat[a * db + b] += w * pa[a] * pb[b];
    }
    return JointDist(std::move(flat), da, db);
}

double ensemble_conditional(const SeparableEnsemble& e, EntropicIndex q) {
    return conditional_tsallis(ensemble_joint(e), q);
}

PptVerdict ppt_test(const BipartiteState& s) {
    const std::vector<double> eigs = eigenvalues_descending(partial_transpose(s, Subsystem::B));
    PptVerdict v;
    v.min_eigenvalue = eigs.back();
    v.positive = v.min_eigenvalue >= -eps_psd;
    return v;
}

PositivitySummary separable_positivity_experiment(long long n_samples,
                                                  std::span<const double> q_grid,
                                                  std::uint64_t base_seed,
                                                  bool inject_singlet_control) {
    if (n_samples <= 0) throw std::domain_error("experiment needs a positive sample count");
    if (q_grid.empty()) throw std::domain_error("experiment needs a non-empty q grid");
    constexpr double violation_floor = -1e-10;

    PositivitySummary out;
    out.n_samples = n_samples;
    out.seed = base_seed;
    out.q_grid.assign(q_grid.begin(), q_grid.end());
    out.min_value = std::numeric_limits<double>::infinity();
    out.violations = 0;

    auto record = [&](double v) {
        out.min_value = std::min(out.min_value, v);
        if (v < violation_floor) ++out.violations;
    };

    // Arm 1: shared-basis ensembles through the closed-form q-expectation.
    for (long long i = 0; i < n_samples; ++i) {
        Sampler smp(base_seed + static_cast<std::uint64_t>(i));
        const JointDist joint = ensemble_joint(smp.shared_basis_ensemble(2, 2, 4));
        for (double q : q_grid) record(conditional_tsallis(joint, q));
    }
    // Arm 2: general separable mixtures through the spectral pipeline.
    for (long long i = 0; i < n_samples; ++i) {
        Sampler smp(base_seed + static_cast<std::uint64_t>(n_samples + i));
        const BipartiteState st = smp.general_separable(2, 2, 4);
        const std::vector<double> joint = detail::clean_spectrum(st.rho().spectrum());
        const std::vector<double> marg =
            detail::clean_spectrum(partial_trace(st, Subsystem::B).spectrum());
        for (double q : q_grid) record(detail::conditional_ratio(joint, marg, q));
    }

    if (inject_singlet_control) {
        const BipartiteState singlet(2, 2, singlet_projector());
        out.control_value = conditional_quantum(singlet, 1.0, Subsystem::A).value;
    }
    return out;
}

}  // namespace tsq
