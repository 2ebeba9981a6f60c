#include "tsallisq/density.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace tsq {

namespace {

void require_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw validation_error(std::string(what) + " must be square and non-empty, got " +
                               std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (!m.allFinite()) throw validation_error(std::string(what) + " has non-finite entries");
}

double hermiticity_residual(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

std::vector<double> eigenvalues_descending(const Matrix& m) {
    require_square(m, "matrix");
    const double herm = hermiticity_residual(m);
    if (herm > eps_herm)
        throw validation_error("matrix is not Hermitian: residual " + std::to_string(herm) +
                               " exceeds " + std::to_string(eps_herm));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw validation_error("Hermitian eigendecomposition failed to converge");
    Eigen::VectorXd ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

DensityMatrix DensityMatrix::validate(const Matrix& m) {
    require_square(m, "density matrix");
    const double herm = hermiticity_residual(m);
    if (herm > eps_herm)
        throw validation_error("density matrix is not Hermitian: residual " +
                               std::to_string(herm) + " exceeds " + std::to_string(eps_herm));
    Matrix h = 0.5 * (m + m.adjoint());
    const double tr = h.trace().real();
    if (std::abs(tr - 1.0) > eps_norm)
        throw validation_error("density matrix trace " + std::to_string(tr) +
                               " deviates from 1 beyond " + std::to_string(eps_norm));
    h /= tr;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw validation_error("Hermitian eigendecomposition failed to converge");
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -eps_psd)
        throw validation_error("density matrix has eigenvalue " + std::to_string(min_eig) +
                               " below -" + std::to_string(eps_psd));
    return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    if (dim <= 0) throw validation_error("dimension must be positive");
    Matrix m = Matrix::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
    if (psi.size() == 0) throw validation_error("state vector must be non-empty");
    if (!psi.allFinite()) throw validation_error("state vector has non-finite entries");
    const double n = psi.norm();
    if (n <= 0.0) throw validation_error("state vector has zero norm");
    Vector u = psi / n;
    return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::diagonal(const ProbDist& p) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(p.size()),
                            static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = p[i];
    return DensityMatrix(std::move(m));
}

BipartiteState::BipartiteState(Eigen::Index d_a, Eigen::Index d_b, DensityMatrix rho)
    : d_a_(d_a), d_b_(d_b), rho_(std::move(rho)) {
    if (d_a_ <= 0 || d_b_ <= 0)
        throw validation_error("subsystem dimensions must be positive");
    if (rho_.dim() != d_a_ * d_b_)
        throw validation_error("state dimension " + std::to_string(rho_.dim()) +
                               " does not factor as " + std::to_string(d_a_) + "*" +
                               std::to_string(d_b_));
}

BipartiteState tensor(const DensityMatrix& a, const DensityMatrix& b) {
    const Eigen::Index da = a.dim(), db = b.dim();
    Matrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    return BipartiteState(da, db, DensityMatrix::validate(out));
}

DensityMatrix partial_trace(const BipartiteState& s, Subsystem over) {
    const Eigen::Index da = s.dim_a(), db = s.dim_b();
    const Matrix& m = s.matrix();
    if (over == Subsystem::B) {
        Matrix out = Matrix::Zero(da, da);
        for (Eigen::Index a = 0; a < da; ++a)
            for (Eigen::Index ap = 0; ap < da; ++ap)
                for (Eigen::Index b = 0; b < db; ++b) out(a, ap) += m(a * db + b, ap * db + b);
        return DensityMatrix::validate(out);
    }
    Matrix out = Matrix::Zero(db, db);
    for (Eigen::Index b = 0; b < db; ++b)
        for (Eigen::Index bp = 0; bp < db; ++bp)
            for (Eigen::Index a = 0; a < da; ++a) out(b, bp) += m(a * db + b, a * db + bp);
    return DensityMatrix::validate(out);
}

Matrix partial_transpose(const BipartiteState& s, Subsystem on) {
    const Eigen::Index da = s.dim_a(), db = s.dim_b();
    const Matrix& m = s.matrix();
    Matrix out(da * db, da * db);
    for (Eigen::Index a = 0; a < da; ++a)
        for (Eigen::Index ap = 0; ap < da; ++ap)
            for (Eigen::Index b = 0; b < db; ++b)
                for (Eigen::Index bp = 0; bp < db; ++bp) {
                    if (on == Subsystem::B)
                        out(a * db + b, ap * db + bp) = m(a * db + bp, ap * db + b);
                    else
                        out(a * db + b, ap * db + bp) = m(ap * db + b, a * db + bp);
                }
    return out;
}

Vector singlet_vector() {
    Vector v = Vector::Zero(4);
    const double r = 1.0 / std::sqrt(2.0);
    v(1) = r;   // |01>
    v(2) = -r;  // |10>
    return v;
}

DensityMatrix singlet_projector() { return DensityMatrix::pure(singlet_vector()); }

BipartiteState werner_popescu(double x) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0)
        throw std::domain_error("Werner-Popescu parameter x must lie in [0, 1], got " +
                                std::to_string(x));
    Matrix m = Matrix::Identity(4, 4) * ((1.0 - x) / 4.0);
    m(1, 1) += x / 2.0;
    m(2, 2) += x / 2.0;
    m(1, 2) -= x / 2.0;
    m(2, 1) -= x / 2.0;
    return BipartiteState(2, 2, DensityMatrix::validate(m));
}

SeparableEnsemble::SeparableEnsemble(std::vector<double> weights, std::vector<ProbDist> p_a,
                                     std::vector<ProbDist> p_b, Matrix basis_a, Matrix basis_b)
    : weights_(std::move(weights)),
      p_a_(std::move(p_a)),
      p_b_(std::move(p_b)),
      basis_a_(std::move(basis_a)),
      basis_b_(std::move(basis_b)) {
    check();
}

SeparableEnsemble::SeparableEnsemble(std::vector<double> weights, std::vector<ProbDist> p_a,
                                     std::vector<ProbDist> p_b)
    : weights_(std::move(weights)), p_a_(std::move(p_a)), p_b_(std::move(p_b)) {
    if (p_a_.empty() || p_b_.empty())
        throw validation_error("separable ensemble needs at least one term");
    basis_a_ = Matrix::Identity(static_cast<Eigen::Index>(p_a_.front().size()),
                                static_cast<Eigen::Index>(p_a_.front().size()));
    basis_b_ = Matrix::Identity(static_cast<Eigen::Index>(p_b_.front().size()),
                                static_cast<Eigen::Index>(p_b_.front().size()));
    check();
}

void SeparableEnsemble::check() const {
    if (weights_.empty()) throw validation_error("separable ensemble needs at least one term");
    if (p_a_.size() != weights_.size() || p_b_.size() != weights_.size())
        throw validation_error("separable ensemble term counts disagree");
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0)
            throw validation_error("ensemble weight must be finite and nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > eps_norm)
        throw validation_error("ensemble weights are not normalized: sum = " +
                               std::to_string(sum));
    const std::size_t da = p_a_.front().size(), db = p_b_.front().size();
    for (const auto& p : p_a_)
        if (p.size() != da) throw validation_error("ensemble A-side distributions have mixed sizes");
    for (const auto& p : p_b_)
        if (p.size() != db) throw validation_error("ensemble B-side distributions have mixed sizes");
    if (basis_a_.rows() != static_cast<Eigen::Index>(da) || basis_a_.rows() != basis_a_.cols())
        throw validation_error("A-side basis shape does not match its distributions");
    if (basis_b_.rows() != static_cast<Eigen::Index>(db) || basis_b_.rows() != basis_b_.cols())
        throw validation_error("B-side basis shape does not match its distributions");
    const double ua = (basis_a_.adjoint() * basis_a_ - Matrix::Identity(basis_a_.rows(), basis_a_.cols()))
                          .cwiseAbs()
                          .maxCoeff();
    const double ub = (basis_b_.adjoint() * basis_b_ - Matrix::Identity(basis_b_.rows(), basis_b_.cols()))
                          .cwiseAbs()
                          .maxCoeff();
    if (ua > eps_herm || ub > eps_herm)
        throw validation_error("ensemble bases are not unitary within tolerance");
}

BipartiteState assemble_separable(const SeparableEnsemble& e) {
    const Eigen::Index da = e.dim_a(), db = e.dim_b();
    Matrix acc = Matrix::Zero(da * db, da * db);
    for (std::size_t l = 0; l < e.terms(); ++l) {
        const Matrix rho_a = e.basis_a() *
                             DensityMatrix::diagonal(e.dists_a()[l]).matrix() *
                             e.basis_a().adjoint();
        const Matrix rho_b = e.basis_b() *
                             DensityMatrix::diagonal(e.dists_b()[l]).matrix() *
                             e.basis_b().adjoint();
        for (Eigen::Index i = 0; i < da; ++i)
            for (Eigen::Index j = 0; j < da; ++j)
                acc.block(i * db, j * db, db, db) += e.weights()[l] * rho_a(i, j) * rho_b;
    }
    return BipartiteState(da, db, DensityMatrix::validate(acc));
}

}  // namespace tsq
