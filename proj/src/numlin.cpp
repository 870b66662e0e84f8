#include "cds/numlin.hpp"

#include <random>

namespace cds::numlin {

Settings& settings() {
    static Settings s;
    return s;
}

namespace {

void check_finite(const CMatrix& M, const char* who) {
    if (!M.allFinite()) throw NumericError(std::string(who) + ": non-finite entries");
}

CVector seeded_unit_vector(Eigen::Index n) {
    std::mt19937_64 rng(settings().seed + 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> g(0.0, 1.0);
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = {g(rng), g(rng)};
    double nrm = v.norm();
    return nrm > 0 ? CVector(v / nrm) : CVector::Unit(n, 0);
}

// largest eigenvalue of the hermitian PSD matrix B
double top_eigenvalue(const CMatrix& B) {
    const auto& s = settings();
    CVector v = seeded_unit_vector(B.rows());
    double lambda = 0.0;
    for (int it = 0; it < s.power_iteration_cap; ++it) {
        CVector w = B * v;
        double nw = w.norm();
        if (nw < 1e-300) return 0.0;
        v = w / nw;
        double next = std::real(v.dot(B * v));
        if (std::abs(next - lambda) <= s.power_rel_tol * std::max(1.0, std::abs(next)))
            return next;
        lambda = next;
    }
    throw NumericError("power iteration did not converge within cap");
}

}  // namespace

Subspace orthonormalize(const CMatrix& M) {
    check_finite(M, "orthonormalize");
    if (M.cols() == 0 || M.rows() == 0) throw NumericError("orthonormalize: empty matrix");
    CMatrix Q = M;
    double scale = M.norm();
    if (scale == 0.0) throw NumericError("orthonormalize: rank-deficient input");
    for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index j = 0; j < Q.cols(); ++j) {
            for (Eigen::Index k = 0; k < j; ++k)
                Q.col(j) -= Q.col(k).dot(Q.col(j)) * Q.col(k);
            double n = Q.col(j).norm();
            if (n < settings().rank_tol * (pass == 0 ? scale : 1.0))
                throw NumericError("orthonormalize: rank-deficient input");
            Q.col(j) /= n;
        }
    }
    return Subspace{std::move(Q)};
}

double spectral_norm(const CMatrix& M) {
    check_finite(M, "spectral_norm");
    if (M.rows() == 0 || M.cols() == 0) throw NumericError("spectral_norm: empty matrix");
    if (M.norm() == 0.0) return 0.0;
    // iterate on the smaller Gram matrix
    CMatrix B = (M.rows() >= M.cols()) ? CMatrix(M.adjoint() * M) : CMatrix(M * M.adjoint());
    double lambda = top_eigenvalue(B);
    return lambda > 0 ? std::sqrt(lambda) : 0.0;
}

double delta_distance(const Subspace& A, const Subspace& B) {
    if (A.ambient_dim() != B.ambient_dim())
        throw NumericError("delta_distance: mismatched ambient dimension");
    if (A.dim() == 0) return 0.0;  // empty sup convention
    Eigen::Index n = A.ambient_dim();
    CMatrix PA = A.basis * A.basis.adjoint();
    CMatrix PB = B.basis * B.basis.adjoint();
    CMatrix R = (CMatrix::Identity(n, n) - PB) * PA;
    return std::min(1.0, spectral_norm(R));
}

int intersection_dim(const Subspace& A, const Subspace& B, double tol) {
    if (A.ambient_dim() != B.ambient_dim())
        throw NumericError("intersection_dim: mismatched ambient dimension");
    if (A.dim() == 0 || B.dim() == 0) return 0;
    CMatrix M = A.basis.adjoint() * B.basis;
    int count = 0;
    Eigen::Index limit = std::min(M.rows(), M.cols());
    for (Eigen::Index k = 0; k < limit; ++k) {
        double sigma = spectral_norm(M);
        if (sigma < 1.0 - tol) break;
        ++count;
        // deflate the extracted singular triplet and look for the next one
        CMatrix G = M.adjoint() * M;
        CVector v = seeded_unit_vector(M.cols());
        for (int it = 0; it < settings().power_iteration_cap; ++it) {
            CVector w = G * v;
            double nw = w.norm();
            if (nw < 1e-300) break;
            CVector next = w / nw;
            if ((next - v).norm() < settings().power_rel_tol && it > 2) {
                v = next;
                break;
            }
            v = next;
        }
        CVector u = M * v;
        double nu = u.norm();
        if (nu < 1e-300) break;
        u /= nu;
        M -= sigma * u * v.adjoint();
    }
    return count;
}

}  // namespace cds::numlin
