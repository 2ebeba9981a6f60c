#include "tsallisq/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tsallisq/quantum.hpp"
#include "tsallisq/sampling.hpp"
#include "tsallisq/werner.hpp"

namespace tsq {

const char* to_string(AxiomId id) {
    switch (id) {
        case AxiomId::max_at_uniform: return "I*";
        case AxiomId::composition: return "II*";
        case AxiomId::expansibility: return "III*";
        case AxiomId::pseudoadditivity: return "pseudoadditivity";
        case AxiomId::correspondence: return "correspondence";
    }
    return "?";
}

namespace {

constexpr double tol_identity = 1e-12;
constexpr double tol_quantum = 1e-10;
constexpr double continuity_modulus = 100.0;

AxiomReport make_report(AxiomId id, std::string label, double q, long long trials,
                        double max_violation, double tolerance) {
    const bool passed = max_violation <= tolerance;
    return AxiomReport{id, std::move(label), q, trials, max_violation, tolerance, passed};
}

}  // namespace

AxiomReport check_max_at_uniform(EntropicIndex q, long long trials, std::uint64_t seed) {
    Sampler smp(seed);
    double worst = -std::numeric_limits<double>::infinity();
    for (long long t = 0; t < trials; ++t) {
        ProbDist p = t == 0   ? ProbDist::uniform(4)
                     : t == 1 ? ProbDist::delta(4, 0)
                              : smp.dirichlet(static_cast<std::size_t>(smp.integer(2, 5)));
        const double s_uniform = tsallis_entropy(ProbDist::uniform(p.size()), q);
        worst = std::max(worst, tsallis_entropy(p, q) - s_uniform);
    }
    return make_report(AxiomId::max_at_uniform, "maximal at uniform", q.value(), trials, worst,
                       tol_identity);
}

AxiomReport check_composition(EntropicIndex q, long long trials, std::uint64_t seed) {
    Sampler smp(seed);
    double worst = 0.0;
    for (long long t = 0; t < trials; ++t) {
        const JointDist j = smp.joint(static_cast<std::size_t>(smp.integer(2, 4)),
                                      static_cast<std::size_t>(smp.integer(2, 4)));
        const double lhs = tsallis_entropy(ProbDist(std::vector<double>(j.flat().begin(),
                                                                        j.flat().end())),
                                           q);
        const double rhs = compose_pseudoadditive(tsallis_entropy(marginal_a(j), q),
                                                  conditional_tsallis(j, q), q);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return make_report(AxiomId::composition, "pseudoadditive chain rule", q.value(), trials,
                       worst, tol_identity);
}

AxiomReport check_expansibility(EntropicIndex q, long long trials, std::uint64_t seed) {
    Sampler smp(seed);
    double worst = 0.0;
    for (long long t = 0; t < trials; ++t) {
        // Both distributions are built from the same vector so normalization
        // rounds identically; the appended zero leaves the mass bitwise equal.
        const std::vector<double> base = smp.dirichlet(
            static_cast<std::size_t>(smp.integer(2, 5))).probs();
        std::vector<double> extended = base;
        extended.push_back(0.0);
        const double s = tsallis_entropy(ProbDist(base), q);
        const double s_ext = tsallis_entropy(ProbDist(std::move(extended)), q);
        worst = std::max(worst, std::abs(s - s_ext));
    }
    return make_report(AxiomId::expansibility, "zero outcome appended", q.value(), trials, worst,
                       0.0);
}

AxiomReport check_pseudoadditivity(EntropicIndex q, long long trials, std::uint64_t seed) {
    Sampler smp(seed);
    double worst = 0.0;
    for (long long t = 0; t < trials; ++t) {
        const ProbDist pa = smp.dirichlet(static_cast<std::size_t>(smp.integer(2, 5)));
        const ProbDist pb = smp.dirichlet(static_cast<std::size_t>(smp.integer(2, 5)));
        const JointDist j = JointDist::product(pa, pb);
        const double lhs = tsallis_entropy(ProbDist(std::vector<double>(j.flat().begin(),
                                                                        j.flat().end())),
                                           q);
        const double rhs = compose_pseudoadditive(tsallis_entropy(pa, q),
                                                  tsallis_entropy(pb, q), q);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return make_report(AxiomId::pseudoadditivity, "independent systems", q.value(), trials,
                       worst, tol_identity);
}

AxiomReport check_correspondence_chain(long long trials, std::uint64_t seed) {
    Sampler smp(seed);
    double worst = 0.0;
    for (long long t = 0; t < trials; ++t) {
        const JointDist j = smp.joint(static_cast<std::size_t>(smp.integer(2, 4)),
                                      static_cast<std::size_t>(smp.integer(2, 4)));
        const double lhs = detail::shannon(j.flat());
        const double rhs = shannon_entropy(marginal_a(j)) + conditional_tsallis(j, 1.0);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return make_report(AxiomId::correspondence, "additive chain rule at q = 1", 1.0, trials,
                       worst, tol_identity);
}

AxiomReport check_correspondence_continuity(long long trials, std::uint64_t seed) {
    Sampler smp(seed);
    constexpr double deltas[] = {1e-4, -1e-4, 1e-6, -1e-6};
    double worst = 0.0;
    for (long long t = 0; t < trials; ++t) {
        const ProbDist p = smp.dirichlet(static_cast<std::size_t>(smp.integer(2, 5)));
        const double s1 = shannon_entropy(p);
        for (double d : deltas)
            worst = std::max(worst, std::abs(tsallis_entropy(p, 1.0 + d) - s1) / std::abs(d));
    }
    return make_report(AxiomId::correspondence, "difference quotient in q at q = 1", 1.0, trials,
                       worst, continuity_modulus);
}

AxiomReport check_quantum_composition(EntropicIndex q) {
    double worst = 0.0;
    long long trials = 0;
    for (int i = 0; i <= 20; ++i) {
        const double x = static_cast<double>(i) / 20.0;
        const BipartiteState s = werner_popescu(x);
        const ConditionalEntropyReport r = conditional_quantum(s, q, Subsystem::A);
        const double lhs = quantum_tsallis(s.rho(), q);
        const double rhs = compose_pseudoadditive(r.s_marginal, r.value, q);
        worst = std::max(worst, std::abs(lhs - rhs));
        ++trials;
    }
    return make_report(AxiomId::composition, "quantum, Werner-Popescu grid", q.value(), trials,
                       worst, tol_quantum);
}

std::vector<AxiomReport> run_axiom_suite(long long trials, std::uint64_t seed,
                                         std::span<const double> q_grid) {
    if (trials < 2) throw std::domain_error("axiom suite needs at least 2 trials");
    std::vector<AxiomReport> out;
    std::uint64_t stream = seed;
    for (double q : q_grid) out.push_back(check_max_at_uniform(q, trials, stream++));
    for (double q : q_grid) out.push_back(check_composition(q, trials, stream++));
    for (double q : q_grid) out.push_back(check_expansibility(q, trials, stream++));
    for (double q : q_grid) out.push_back(check_pseudoadditivity(q, trials, stream++));
    out.push_back(check_correspondence_chain(trials, stream++));
    out.push_back(check_correspondence_continuity(trials, stream++));
    for (double q : q_grid)
        if (q <= quantum_composition_q_max) out.push_back(check_quantum_composition(q));
    return out;
}

}  // namespace tsq
