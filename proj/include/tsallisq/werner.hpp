#pragma once

#include <span>
#include <vector>

#include "tsallisq/classical.hpp"

namespace tsq {

// Closed-form conditional entropy of the Werner-Popescu family,
//   S_q[B|A](x) = [ (3/2) ((1-x)/2)^q + (1/2) ((1+3x)/2)^q - 1 ] / (1 - q),
// with the q -> 1 limit -(3/2) A ln A - (1/2) B ln B taken inside the eps_q
// window. Powers are evaluated in log space, so the expression survives the
// q ~ 1e6 regime the threshold solver probes.
double werner_cond_entropy(double x, EntropicIndex q);

struct ThresholdPoint {
    double q;
    double x_star;           // sign-change location, in (0, 1)
    double solver_residual;  // |S_q[B|A](x_star)|
};

// Location of the sign change of werner_cond_entropy in x. The root solves
// (3/2) A^q + (1/2) B^q = 1, whose log-sum-exp is monotone in x for either
// side of q = 1; bisection on that sign is exact to the last double.
ThresholdPoint threshold(EntropicIndex q);

std::vector<ThresholdPoint> threshold_scan(std::span<const double> q_grid);

// Default scan grid: log-spaced from 0.2 to 1e6, 40 points.
std::vector<double> log_spaced_q_grid(double lo = 0.2, double hi = 1e6, int points = 40);

// The x where the Werner partial transpose loses positivity, located by
// bisection through the actual partial_transpose/eigenvalue pipeline
// (analytically 1/3, from the PT eigenvalue (1 - 3x)/4).
double ppt_sign_flip();

struct CriterionTable {
    double bell_bound;        // 1/sqrt(2): CHSH violation threshold
    double von_neumann_zero;  // threshold(q = 1)
    double q_infinity_limit;  // extrapolated lim_{q->inf} threshold(q)
    double ppt_threshold;     // ppt_sign_flip()
};

// The ordering ppt_threshold < von_neumann_zero is what makes the large-q
// conditional entropy the stronger witness; q_infinity_limit lands on
// ppt_threshold, where the two criteria coincide for this family.
CriterionTable criterion_table();

}  // namespace tsq
