#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "tsallisq/common.hpp"

namespace tsq {

// Entropic index q > 0. Values with |q-1| < eps_q are treated as the
// Shannon / von Neumann limit throughout.
class EntropicIndex {
public:
    EntropicIndex(double q) : q_(q) {
        if (!std::isfinite(q) || q <= 0.0)
            throw std::domain_error("entropic index must be finite and positive, got " +
                                    std::to_string(q));
    }
    double value() const { return q_; }
    bool near_unity() const { return std::abs(q_ - 1.0) < eps_q; }

private:
    double q_;
};

// Normalized probability distribution over W outcomes. Construction validates
// (entries in [0,1], sum within eps_norm of 1) and renormalizes exactly to
// unit sum, so downstream entropy kernels may assume sum == 1.
class ProbDist {
public:
    explicit ProbDist(std::vector<double> p);
    static ProbDist uniform(std::size_t w);
    static ProbDist delta(std::size_t w, std::size_t outcome);

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    const std::vector<double>& probs() const { return p_; }
    std::span<const double> span() const { return p_; }

private:
    std::vector<double> p_;
};

// Joint distribution p(a, b) over rows x cols outcomes, stored row-major with
// rows indexing the conditioning system A. Same validation contract as
// ProbDist over the flattened entries.
class JointDist {
public:
    JointDist(std::vector<double> flat, std::size_t rows, std::size_t cols);
    explicit JointDist(const std::vector<std::vector<double>>& table);
    static JointDist product(const ProbDist& a, const ProbDist& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double at(std::size_t a, std::size_t b) const { return flat_[a * cols_ + b]; }
    std::span<const double> flat() const { return flat_; }
    // Mass of row a: the marginal probability p(a).
    double row_mass(std::size_t a) const;

private:
    std::vector<double> flat_;
    std::size_t rows_, cols_;
};

namespace detail {

// Power sums over the nonzero entries of p, with the 0^q = 0 convention.
// Evaluated as exp(q ln p) per the usual nonextensive-statistics recipe;
// exact for p = 1, and zero entries never contribute.
double power_sum(std::span<const double> p, double q);
// sum p * expm1((q-1) ln p) == power_sum(p, q) - 1, stable for q near 1.
double power_sum_minus_one(std::span<const double> p, double q);

double shannon(std::span<const double> p);
// Tsallis entropy of a normalized spectrum; dispatches on |q-1|:
// < eps_q -> Shannon limit, <= 0.1 -> expm1 form, else plain power sum.
double tsallis(std::span<const double> p, double q);

// (S_q[joint] - S_q[marg]) / (1 + (1-q) S_q[marg]) evaluated directly from
// power sums as (t_joint - t_marg) / ((1-q) t_marg), which stays accurate
// when the denominator 1 + (1-q) S_q[marg] = t_marg underflows the rounding
// of the individual entropies (large q). Throws std::domain_error if t_marg
// underflows to exactly zero in double precision.
double conditional_ratio(std::span<const double> joint, std::span<const double> marg, double q);

}  // namespace detail

// S_1[p] = -sum p ln p (natural log).
double shannon_entropy(const ProbDist& p);

// S_q[p] = (sum_i p_i^q - 1) / (1 - q); Shannon limit within eps_q of q = 1.
double tsallis_entropy(const ProbDist& p, EntropicIndex q);

ProbDist marginal_a(const JointDist& j);
ProbDist marginal_b(const JointDist& j);

// p(b | a) as a distribution over B. Conditioning on a zero-mass outcome is a
// domain error.
ProbDist conditional_dist(const JointDist& j, std::size_t a);

// q-expectation form of the conditional entropy,
//   S_q[B|A] = sum_a p(a)^q S_q[B|a] / sum_a p(a)^q,
// zero-mass outcomes skipped. Throws std::domain_error if every p(a)^q
// underflows (q too large for double precision).
double conditional_tsallis(const JointDist& j, EntropicIndex q);

// Equivalent ratio form (S_q[A,B] - S_q[A]) / (1 + (1-q) S_q[A]).
double conditional_via_ratio(const JointDist& j, EntropicIndex q);

// Pseudoadditive composition S_q[A] + S_q[B|A] + (1-q) S_q[A] S_q[B|A].
double compose_pseudoadditive(double s_a, double s_b_given_a, EntropicIndex q);

}  // namespace tsq
