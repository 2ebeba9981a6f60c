#include "tsallisq/werner.hpp"

#include <cmath>
#include <limits>

#include "tsallisq/quantum.hpp"

namespace tsq {

namespace {

void check_x(double x) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0)
        throw std::domain_error("Werner-Popescu parameter x must lie in [0, 1], got " +
                                std::to_string(x));
}

// log of (3/2) A^q + (1/2) B^q with A = (1-x)/2, B = (1+3x)/2. The bracket
// crosses 1 exactly where S_q[B|A] crosses zero; working with its log keeps
// q ~ 1e6 in range (A^q alone underflows past q ~ 700).
double log_bracket(double x, double q) {
    const double a = (1.0 - x) / 2.0;
    const double b = (1.0 + 3.0 * x) / 2.0;
    const double t1 = a > 0.0 ? std::log(1.5) + q * std::log(a)
                              : -std::numeric_limits<double>::infinity();
    const double t2 = std::log(0.5) + q * std::log(b);
    const double m = std::max(t1, t2);  // t2 is always finite
    return m + std::log(std::exp(t1 - m) + std::exp(t2 - m));
}

}  // namespace

double werner_cond_entropy(double x, EntropicIndex q) {
    check_x(x);
    const double qq = q.value();
    const double a = (1.0 - x) / 2.0;
    const double b = (1.0 + 3.0 * x) / 2.0;
    if (q.near_unity()) {
        const double ta = a > 0.0 ? a * std::log(a) : 0.0;
        return -(1.5 * ta + 0.5 * b * std::log(b));
    }
    const double pa = a > 0.0 ? std::exp(qq * std::log(a)) : 0.0;
    const double pb = std::exp(qq * std::log(b));
    const double num = 1.5 * pa + 0.5 * pb - 1.0;
    return num == 0.0 ? 0.0 : num / (1.0 - qq);
}

ThresholdPoint threshold(EntropicIndex q) {
    const double qq = q.value();
    // Positive on the entangled (large-x) side of the root for any q.
    auto entangled_side = [&](double x) {
        if (q.near_unity()) return -werner_cond_entropy(x, q);
        const double g = log_bracket(x, qq);
        return qq > 1.0 ? g : -g;
    };
    double lo = 0.0, hi = 1.0;  // entangled_side(0) < 0 < entangled_side(1)
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        (entangled_side(mid) > 0.0 ? hi : lo) = mid;
    }
    ThresholdPoint p;
    p.q = qq;
    p.x_star = 0.5 * (lo + hi);
    p.solver_residual = std::abs(werner_cond_entropy(p.x_star, q));
    return p;
}

std::vector<ThresholdPoint> threshold_scan(std::span<const double> q_grid) {
    std::vector<ThresholdPoint> out;
    out.reserve(q_grid.size());
    for (double q : q_grid) out.push_back(threshold(q));
    return out;
}

std::vector<double> log_spaced_q_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw std::domain_error("log-spaced grid needs 0 < lo < hi and at least 2 points");
    std::vector<double> g(static_cast<std::size_t>(points));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < points; ++i)
        g[static_cast<std::size_t>(i)] =
            std::exp(llo + (lhi - llo) * static_cast<double>(i) / (points - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

double ppt_sign_flip() {
    auto min_eig = [](double x) { return ppt_test(werner_popescu(x)).min_eigenvalue; };
    double lo = 0.0, hi = 1.0;  // min_eig decreasing: +1/4 at x=0, -1/2 at x=1
    for (int it = 0; it < 100 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        (min_eig(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

CriterionTable criterion_table() {
    CriterionTable t;
    t.bell_bound = 1.0 / std::sqrt(2.0);
    t.von_neumann_zero = threshold(1.0).x_star;
    // x*(q) = 1/3 + c/q + O(1/q^2): Richardson step at q = 5e5 and 1e6
    // cancels the 1/q term, leaving an O(1/q^2) ~ 1e-13 residue.
    const double x1 = threshold(5e5).x_star;
    const double x2 = threshold(1e6).x_star;
    t.q_infinity_limit = 2.0 * x2 - x1;
    t.ppt_threshold = ppt_sign_flip();
    return t;
}

}  // namespace tsq
