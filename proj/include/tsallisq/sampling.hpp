#pragma once

#include <cstdint>
#include <random>

#include "tsallisq/density.hpp"

namespace tsq {

// Deterministic random inputs for the randomized checks and experiments.
// Every draw goes through one mt19937_64 stream, so a Sampler seeded the same
// way replays byte-identical sequences; batch routines derive per-sample
// seeds as base_seed + sample_index rather than sharing a stream.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform();   // [0, 1)
    double gaussian();  // standard normal
    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);  // inclusive

    // Symmetric Dirichlet(1): normalized exponentials.
    ProbDist dirichlet(std::size_t n);
    JointDist joint(std::size_t rows, std::size_t cols);

    // Haar-distributed unitary: QR of a complex Gaussian matrix with the
    // R-diagonal phases absorbed.
    Matrix unitary(Eigen::Index dim);
    // Full-rank mixed state G G^dag / tr(G G^dag), G complex Gaussian.
    DensityMatrix density(Eigen::Index dim);

    // Shared-basis separable ensemble with 1..max_terms terms.
    SeparableEnsemble shared_basis_ensemble(Eigen::Index d_a, Eigen::Index d_b, int max_terms);
    // General separable mixture sum_l w_l rho_l^A (x) rho_l^B with independent
    // random mixed states per term.
    BipartiteState general_separable(Eigen::Index d_a, Eigen::Index d_b, int max_terms);

private:
    std::mt19937_64 rng_;
};

}  // namespace tsq
