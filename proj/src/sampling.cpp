#include "tsallisq/sampling.hpp"

#include <Eigen/QR>
#include <cmath>

namespace tsq {

double Sampler::uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
}

double Sampler::gaussian() {
    return std::normal_distribution<double>(0.0, 1.0)(rng_);
}

std::uint64_t Sampler::integer(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

ProbDist Sampler::dirichlet(std::size_t n) {
    std::vector<double> g(n);
    double sum = 0.0;
    for (double& v : g) {
        v = -std::log1p(-uniform());  // Exp(1), never hits log(0)
        sum += v;
    }
    for (double& v : g) v /= sum;
    return ProbDist(std::move(g));
}

JointDist Sampler::joint(std::size_t rows, std::size_t cols) {
    ProbDist flat = dirichlet(rows * cols);
    return JointDist(flat.probs(), rows, cols);
}

Matrix Sampler::unitary(Eigen::Index dim) {
    Matrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            g(i, j) = std::complex<double>(gaussian(), gaussian());
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the R-diagonal phases so the distribution is Haar, not QR-biased.
    for (Eigen::Index j = 0; j < dim; ++j) {
        std::complex<double> d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= (a == 0.0 ? std::complex<double>(1.0, 0.0) : d / a);
    }
    return q;
}

DensityMatrix Sampler::density(Eigen::Index dim) {
    Matrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            g(i, j) = std::complex<double>(gaussian(), gaussian());
    Matrix w = g * g.adjoint();
    w /= w.trace().real();
    return DensityMatrix::validate(w);
}

SeparableEnsemble Sampler::shared_basis_ensemble(Eigen::Index d_a, Eigen::Index d_b,
                                                 int max_terms) {
    const std::size_t n = static_cast<std::size_t>(integer(1, static_cast<std::uint64_t>(max_terms)));
    ProbDist w = dirichlet(n);
    std::vector<ProbDist> pa, pb;
    pa.reserve(n);
    pb.reserve(n);
    for (std::size_t l = 0; l < n; ++l) {
        pa.push_back(dirichlet(static_cast<std::size_t>(d_a)));
        pb.push_back(dirichlet(static_cast<std::size_t>(d_b)));
    }
    Matrix ua = unitary(d_a), ub = unitary(d_b);
    return SeparableEnsemble(w.probs(), std::move(pa), std::move(pb), std::move(ua), std::move(ub));
}

BipartiteState Sampler::general_separable(Eigen::Index d_a, Eigen::Index d_b, int max_terms) {
    const std::size_t n = static_cast<std::size_t>(integer(1, static_cast<std::uint64_t>(max_terms)));
    ProbDist w = dirichlet(n);
    Matrix acc = Matrix::Zero(d_a * d_b, d_a * d_b);
    for (std::size_t l = 0; l < n; ++l) {
        const Matrix rho_a = density(d_a).matrix();
        const Matrix rho_b = density(d_b).matrix();
        for (Eigen::Index i = 0; i < d_a; ++i)
            for (Eigen::Index j = 0; j < d_a; ++j)
                acc.block(i * d_b, j * d_b, d_b, d_b) += w[l] * rho_a(i, j) * rho_b;
    }
    return BipartiteState(d_a, d_b, DensityMatrix::validate(acc));
}

}  // namespace tsq
