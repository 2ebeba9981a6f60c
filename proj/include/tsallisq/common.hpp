#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tsq {

// Validation tolerances shared across the toolkit.
inline constexpr double eps_norm = 1e-9;   // probability sum / trace normalization
inline constexpr double eps_herm = 1e-9;   // Hermiticity and unitarity residuals
inline constexpr double eps_psd  = 1e-10;  // allowed eigenvalue negativity
inline constexpr double eps_q    = 1e-8;   // |q-1| window handled by the q->1 limit

enum class Subsystem { A, B };

inline const char* to_string(Subsystem s) { return s == Subsystem::A ? "A" : "B"; }

// Thrown when an input violates a structural invariant (normalization,
// Hermiticity, positivity, shape). Domain violations that are a matter of
// parameter range (q <= 0, x outside [0,1], conditioning on a null outcome)
// use std::domain_error instead.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// q values exercised by default in scans and randomized checks:
// {0.2, 0.5, 1, 2, 5, 10, 50, 200}.
const std::vector<double>& default_q_grid();

}  // namespace tsq
