#include "tsallisq/classical.hpp"

#include <algorithm>
#include <numeric>

namespace tsq {

const std::vector<double>& default_q_grid() {
    static const std::vector<double> grid{0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 200.0};
    return grid;
}

namespace {

// Validates entries and returns the (pre-normalization) total mass.
double checked_mass(const std::vector<double>& p, const char* what) {
    if (p.empty()) throw validation_error(std::string(what) + " must have at least one entry");
    double sum = 0.0;
    for (double v : p) {
        if (!std::isfinite(v))
            throw validation_error(std::string(what) + " has a non-finite entry");
        if (v < 0.0)
            throw validation_error(std::string(what) + " has a negative entry " +
                                   std::to_string(v));
        if (v > 1.0 + eps_norm)
            throw validation_error(std::string(what) + " has an entry above 1: " +
                                   std::to_string(v));
        sum += v;
    }
    if (std::abs(sum - 1.0) > eps_norm)
        throw validation_error(std::string(what) + " is not normalized: sum = " +
                               std::to_string(sum));
    return sum;
}

}  // namespace

ProbDist::ProbDist(std::vector<double> p) : p_(std::move(p)) {
    const double sum = checked_mass(p_, "probability distribution");
    for (double& v : p_) v /= sum;
}

ProbDist ProbDist::uniform(std::size_t w) {
    if (w == 0) throw validation_error("uniform distribution needs at least one outcome");
    return ProbDist(std::vector<double>(w, 1.0 / static_cast<double>(w)));
}

ProbDist ProbDist::delta(std::size_t w, std::size_t outcome) {
    if (outcome >= w) throw validation_error("delta outcome index out of range");
    std::vector<double> p(w, 0.0);
    p[outcome] = 1.0;
    return ProbDist(std::move(p));
}

JointDist::JointDist(std::vector<double> flat, std::size_t rows, std::size_t cols)
    : flat_(std::move(flat)), rows_(rows), cols_(cols) {
    if (rows_ == 0 || cols_ == 0) throw validation_error("joint distribution must be non-empty");
    if (flat_.size() != rows_ * cols_)
        throw validation_error("joint distribution shape mismatch: " +
                               std::to_string(flat_.size()) + " entries for " +
                               std::to_string(rows_) + "x" + std::to_string(cols_));
    const double sum = checked_mass(flat_, "joint distribution");
    for (double& v : flat_) v /= sum;
}

JointDist::JointDist(const std::vector<std::vector<double>>& table)
    : JointDist(
          [&table] {
              std::vector<double> flat;
              for (const auto& row : table) {
                  if (!table.empty() && row.size() != table.front().size())
                      throw validation_error("joint distribution rows have unequal lengths");
                  flat.insert(flat.end(), row.begin(), row.end());
              }
              return flat;
          }(),
          table.size(), table.empty() ? 0 : table.front().size()) {}

JointDist JointDist::product(const ProbDist& a, const ProbDist& b) {
    std::vector<double> flat(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) flat[i * b.size() + j] = a[i] * b[j];
    return JointDist(std::move(flat), a.size(), b.size());
}

double JointDist::row_mass(std::size_t a) const {
    double m = 0.0;
    for (std::size_t b = 0; b < cols_; ++b) m += at(a, b);
    return m;
}

namespace detail {

double power_sum(std::span<const double> p, double q) {
    double s = 0.0;
    for (double v : p)
        if (v > 0.0) s += std::exp(q * std::log(v));
    return s;
}

double power_sum_minus_one(std::span<const double> p, double q) {
    double s = 0.0;
    for (double v : p)
        if (v > 0.0) s += v * std::expm1((q - 1.0) * std::log(v));
    return s;
}

double shannon(std::span<const double> p) {
    double acc = 0.0;
    for (double v : p)
        if (v > 0.0) acc += v * std::log(v);
    return acc == 0.0 ? 0.0 : -acc;
}

double tsallis(std::span<const double> p, double q) {
    if (std::abs(q - 1.0) < eps_q) return shannon(p);
    if (std::abs(q - 1.0) <= 0.1) return power_sum_minus_one(p, q) / (1.0 - q);
    const double s = power_sum(p, q) - 1.0;
    return s == 0.0 ? 0.0 : s / (1.0 - q);
}

double conditional_ratio(std::span<const double> joint, std::span<const double> marg, double q) {
    if (std::abs(q - 1.0) < eps_q) return shannon(joint) - shannon(marg);
    if (std::abs(q - 1.0) <= 0.1) {
        const double dj = power_sum_minus_one(joint, q);
        const double dm = power_sum_minus_one(marg, q);
        return (dj - dm) / ((1.0 - q) * (1.0 + dm));
    }
    const double tj = power_sum(joint, q);
    const double tm = power_sum(marg, q);
    if (tm == 0.0)
        throw std::domain_error("entropic index too large: marginal power sum underflows at q = " +
                                std::to_string(q));
    const double num = tj - tm;
    return num == 0.0 ? 0.0 : num / ((1.0 - q) * tm);
}

}  // namespace detail

double shannon_entropy(const ProbDist& p) { return detail::shannon(p.span()); }

double tsallis_entropy(const ProbDist& p, EntropicIndex q) {
    return detail::tsallis(p.span(), q.value());
}

ProbDist marginal_a(const JointDist& j) {
    std::vector<double> m(j.rows(), 0.0);
    for (std::size_t a = 0; a < j.rows(); ++a) m[a] = j.row_mass(a);
    return ProbDist(std::move(m));
}

ProbDist marginal_b(const JointDist& j) {
    std::vector<double> m(j.cols(), 0.0);
    for (std::size_t a = 0; a < j.rows(); ++a)
        for (std::size_t b = 0; b < j.cols(); ++b) m[b] += j.at(a, b);
    return ProbDist(std::move(m));
}

ProbDist conditional_dist(const JointDist& j, std::size_t a) {
    if (a >= j.rows()) throw validation_error("conditioning outcome index out of range");
    const double mass = j.row_mass(a);
    if (mass == 0.0)
        throw std::domain_error("conditioning on zero-probability outcome a = " +
                                std::to_string(a));
    std::vector<double> c(j.cols());
    for (std::size_t b = 0; b < j.cols(); ++b) c[b] = j.at(a, b) / mass;
    return ProbDist(std::move(c));
}

double conditional_tsallis(const JointDist& j, EntropicIndex q) {
    const double qq = q.value();
    const bool unity = q.near_unity();
    std::vector<double> cond(j.cols());
    double num = 0.0, den = 0.0;
    for (std::size_t a = 0; a < j.rows(); ++a) {
        const double mass = j.row_mass(a);
        if (mass == 0.0) continue;  // 0^q = 0: null outcomes drop out of both sums
        for (std::size_t b = 0; b < j.cols(); ++b) cond[b] = j.at(a, b) / mass;
        const double w = unity ? mass : std::exp(qq * std::log(mass));
        num += w * detail::tsallis(cond, qq);
        den += w;
    }
    if (den == 0.0)
        throw std::domain_error("entropic index too large: every p(a)^q underflows at q = " +
                                std::to_string(qq));
    return num / den;
}

double conditional_via_ratio(const JointDist& j, EntropicIndex q) {
    std::vector<double> marg(j.rows());
    for (std::size_t a = 0; a < j.rows(); ++a) marg[a] = j.row_mass(a);
    return detail::conditional_ratio(j.flat(), marg, q.value());
}

double compose_pseudoadditive(double s_a, double s_b_given_a, EntropicIndex q) {
    return s_a + s_b_given_a + (1.0 - q.value()) * s_a * s_b_given_a;
}

}  // namespace tsq
