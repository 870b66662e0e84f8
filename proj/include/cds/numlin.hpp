#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace cds::numlin {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One shared knob set so rank decisions and iteration tolerances stay
// consistent across every caller.
struct Settings {
    double rank_tol = 1e-9;
    double power_rel_tol = 1e-10;
    int power_iteration_cap = 10000;
    unsigned long long seed = 0;
};
Settings& settings();

struct Subspace {
    CMatrix basis;  // orthonormal columns

    Eigen::Index ambient_dim() const { return basis.rows(); }
    Eigen::Index dim() const { return basis.cols(); }
};

// Modified Gram-Schmidt with one reorthogonalization pass. Throws on
// rank deficiency (projected column norm below rank_tol).
Subspace orthonormalize(const CMatrix& M);

// Largest singular value by power iteration on M^H M (deterministic seed).
double spectral_norm(const CMatrix& M);

// delta(A, B) = sup |<u,v>|/(|u||v|) over u in B-perp, v in A;
// computed as || (I - P_B) P_A ||_2. Value in [0, 1]; delta(A, B) = 0 when
// A is contained in B. Not symmetric.
double delta_distance(const Subspace& A, const Subspace& B);

// Number of principal angles equal to zero within tol: singular values of
// A^H B equal to 1 within tol, counted by power iteration with deflation.
int intersection_dim(const Subspace& A, const Subspace& B, double tol);

}  // namespace cds::numlin
