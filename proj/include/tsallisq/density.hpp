#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "tsallisq/classical.hpp"
#include "tsallisq/common.hpp"

namespace tsq {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Eigenvalues of a Hermitian matrix in descending order. Checks the
// Hermiticity residual (eps_herm) but makes no positivity or trace demands,
// so it also serves partial transposes, whose spectra may be negative.
std::vector<double> eigenvalues_descending(const Matrix& m);

// Validated density matrix: square, Hermitian within eps_herm, unit trace
// within eps_norm, eigenvalues >= -eps_psd. The stored matrix is hermitized
// ((M + M^dag)/2) and scaled to exactly unit trace.
class DensityMatrix {
public:
    static DensityMatrix validate(const Matrix& m);
    static DensityMatrix maximally_mixed(Eigen::Index dim);
    // |psi><psi| for a (renormalized) state vector.
    static DensityMatrix pure(const Vector& psi);
    static DensityMatrix diagonal(const ProbDist& p);

    Eigen::Index dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    // Raw spectrum, descending. Cleanup for entropy evaluation (noise-floor
    // truncation, clamping, renormalization) lives in the entropy layer.
    std::vector<double> spectrum() const { return eigenvalues_descending(m_); }

private:
    explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

// Density matrix on H_A (x) H_B with the composite index k = a * dB + b.
class BipartiteState {
public:
    BipartiteState(Eigen::Index d_a, Eigen::Index d_b, DensityMatrix rho);

    Eigen::Index dim_a() const { return d_a_; }
    Eigen::Index dim_b() const { return d_b_; }
    const DensityMatrix& rho() const { return rho_; }
    const Matrix& matrix() const { return rho_.matrix(); }

private:
    Eigen::Index d_a_, d_b_;
    DensityMatrix rho_;
};

BipartiteState tensor(const DensityMatrix& a, const DensityMatrix& b);
// Reduced state: trace out the named subsystem.
DensityMatrix partial_trace(const BipartiteState& s, Subsystem over);
// Partial transpose on the named subsystem. Returns a raw Hermitian matrix
// (not a DensityMatrix: it may fail positivity, which is the whole point).
Matrix partial_transpose(const BipartiteState& s, Subsystem on);

// Singlet |Psi-> = (|01> - |10>)/sqrt(2).
Vector singlet_vector();
DensityMatrix singlet_projector();

// Werner-Popescu mixture ((1-x)/4) I_4 + x |Psi-><Psi-|, x in [0, 1].
BipartiteState werner_popescu(double x);

// Convex mixture sum_l w_l rho_l with per-term product states
// (U_A diag(p_l) U_A^dag) (x) (U_B diag(r_l) U_B^dag): every term shares the
// two local bases, which is what makes the classical q-expectation formula
// for S_q[B|A] apply to the assembled state exactly.
class SeparableEnsemble {
public:
    SeparableEnsemble(std::vector<double> weights, std::vector<ProbDist> p_a,
                      std::vector<ProbDist> p_b, Matrix basis_a, Matrix basis_b);
    // Identity local bases.
    SeparableEnsemble(std::vector<double> weights, std::vector<ProbDist> p_a,
                      std::vector<ProbDist> p_b);

    std::size_t terms() const { return weights_.size(); }
    Eigen::Index dim_a() const { return basis_a_.rows(); }
    Eigen::Index dim_b() const { return basis_b_.rows(); }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<ProbDist>& dists_a() const { return p_a_; }
    const std::vector<ProbDist>& dists_b() const { return p_b_; }
    const Matrix& basis_a() const { return basis_a_; }
    const Matrix& basis_b() const { return basis_b_; }

private:
    void check() const;
    std::vector<double> weights_;
    std::vector<ProbDist> p_a_, p_b_;
    Matrix basis_a_, basis_b_;
};

// Assemble the ensemble's density matrix. Separable by construction.
BipartiteState assemble_separable(const SeparableEnsemble& e);

}  // namespace tsq
