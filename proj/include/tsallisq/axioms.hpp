#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tsallisq/classical.hpp"

namespace tsq {

// The generalized Shannon-Khinchin axioms the q-entropy satisfies, plus the
// two bookkeeping properties worth regression-testing alongside them.
enum class AxiomId {
    max_at_uniform,    // [I*]  S_q maximal at the uniform distribution
    composition,       // [II*] S_q[A,B] = S_q[A] + S_q[B|A] + (1-q) S_q[A] S_q[B|A]
    expansibility,     // [III*] appending a zero-probability outcome changes nothing
    pseudoadditivity,  // composition on independent systems
    correspondence     // q -> 1: additive chain rule and continuity in q
};

const char* to_string(AxiomId id);

struct AxiomReport {
    AxiomId id;
    std::string label;  // which variant of the check ran
    double q;
    long long trials;
    double max_violation;
    double tolerance;
    bool passed;  // max_violation <= tolerance
};

// Each check draws its random inputs from a single Sampler stream seeded as
// given, so reports are reproducible. Trials 0 and 1 of the maximality check
// are always the uniform and a delta distribution; the rest are Dirichlet(1)
// over 2..5 outcomes (joints over 2..4 x 2..4).
AxiomReport check_max_at_uniform(EntropicIndex q, long long trials, std::uint64_t seed);
AxiomReport check_composition(EntropicIndex q, long long trials, std::uint64_t seed);
// Bitwise check: tolerance is exactly zero.
AxiomReport check_expansibility(EntropicIndex q, long long trials, std::uint64_t seed);
AxiomReport check_pseudoadditivity(EntropicIndex q, long long trials, std::uint64_t seed);
// |S_1[A,B] - S_1[A] - S_1[B|A]| on random joints at q = 1.
AxiomReport check_correspondence_chain(long long trials, std::uint64_t seed);
// Difference quotient |S_{1+d} - S_1| / |d| at d = ±1e-4, ±1e-6 stays below
// a modulus of 100.
AxiomReport check_correspondence_continuity(long long trials, std::uint64_t seed);
// Largest q at which the quantum composition identity is checkable in double
// precision. Reconstructing the marginal power sum 2^(1-q) from the rounded
// marginal entropy leaves an absolute error near 2^(q-1) eps / (q-1), which
// crosses the 1e-10 tolerance around q = 24; 16 keeps a wide margin.
inline constexpr double quantum_composition_q_max = 16.0;

// Composition identity through the spectral pipeline on the Werner-Popescu
// family, x in {0, 0.05, ..., 1}. Meaningful up to quantum_composition_q_max;
// beyond that no double-precision tolerance applies (see above).
AxiomReport check_quantum_composition(EntropicIndex q);

// Every check across a q grid: the four classical axioms per q, the two
// correspondence checks at q = 1, and the quantum composition check for the
// grid's q <= quantum_composition_q_max.
std::vector<AxiomReport> run_axiom_suite(long long trials, std::uint64_t seed,
                                         std::span<const double> q_grid);

}  // namespace tsq
