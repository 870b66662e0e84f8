#pragma once

#include <complex>
#include <vector>

#include "cds/gaussrat.hpp"
#include "cds/poly.hpp"

namespace cds::grassmann {

struct NotTransversal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coordinate chart of G(d,n): W0 = span of the w0 coordinate axes (the graph
// domain), W1 = span of the complementary axes. Indices are 0-based and
// strictly increasing.
struct Chart {
    int n = 0;
    int d = 0;
    std::vector<int> w0;
    std::vector<int> w1;

    bool operator==(const Chart& o) const { return n == o.n && w0 == o.w0; }
};

// All C(n,d) coordinate charts, w0 index sets in lexicographic order.
std::vector<Chart> chart_cover(int n, int d);

Chart chart_from_w0(int n, const std::vector<int>& w0);

// Variable set of the chart ring C[z_1..z_n, a_ij]: z-block 0, a-block 1.
// a_ij corresponds to output coordinate w1[i] and input slot w0[j].
VarsPtr chart_ring(const Chart& chart, const std::vector<std::string>& z_names = {});
std::string a_name(int i, int j);
// index of a_ij inside the chart ring (after the n z-variables)
size_t a_index(const Chart& chart, int i, int j);

namespace detail {
inline bool scalar_zero(const GaussRat& v, double) { return v.is_zero(); }
inline bool scalar_zero(const std::complex<double>& v, double tol) { return std::abs(v) <= tol; }
inline double scalar_size(const GaussRat& v) { return v.is_zero() ? 0.0 : 1.0; }
inline double scalar_size(const std::complex<double>& v) { return std::abs(v); }
}  // namespace detail

// Matrix coordinates of a d-plane in a chart: the plane is the graph of the
// linear map W0 -> W1 with matrix a ((n-d) x d). Scalar is either GaussRat
// (exact pipeline) or std::complex<double> (numeric pipeline); the two kinds
// never mix.
template <typename Scalar>
struct PlaneMatrix {
    Chart chart;
    std::vector<std::vector<Scalar>> a;  // (n-d) rows, d cols
};

template <typename Scalar>
struct PlaneBasis {
    int n = 0;
    std::vector<std::vector<Scalar>> cols;  // each of length n
};

// Column j = e_{w0[j]} + sum_i a[i][j] e_{w1[i]}.
template <typename Scalar>
PlaneBasis<Scalar> plane_from_matrix(const PlaneMatrix<Scalar>& p) {
    PlaneBasis<Scalar> W;
    W.n = p.chart.n;
    for (int j = 0; j < p.chart.d; ++j) {
        std::vector<Scalar> col(static_cast<size_t>(p.chart.n), Scalar(0));
        col[static_cast<size_t>(p.chart.w0[j])] = Scalar(1);
        for (size_t i = 0; i < p.a.size(); ++i)
            col[static_cast<size_t>(p.chart.w1[i])] = p.a[i][j];
        W.cols.push_back(std::move(col));
    }
    return W;
}

// Inverse of plane_from_matrix: a = (w1-rows of W) * (w0-rows of W)^-1.
// Throws NotTransversal when the projection of W onto W0 is singular.
template <typename Scalar>
PlaneMatrix<Scalar> matrix_from_plane(const Chart& chart, const PlaneBasis<Scalar>& W) {
    int d = chart.d;
    if (static_cast<int>(W.cols.size()) != d || W.n != chart.n)
        throw NotTransversal("matrix_from_plane: plane dimension does not match chart");
    size_t nd = chart.w1.size();
    // Solve a = C B^-1 with B(r,c) = W.cols[c][w0[r]] (projection onto W0)
    // and C(i,c) = W.cols[c][w1[i]]. Row-reducing [B^T | C^T] leaves a^T in
    // the right block.
    std::vector<std::vector<Scalar>> aug(static_cast<size_t>(d));
    for (int r = 0; r < d; ++r) {
        auto& row = aug[static_cast<size_t>(r)];
        for (int c = 0; c < d; ++c)
            row.push_back(W.cols[static_cast<size_t>(r)][static_cast<size_t>(chart.w0[c])]);
        for (size_t i = 0; i < nd; ++i)
            row.push_back(W.cols[static_cast<size_t>(r)][static_cast<size_t>(chart.w1[i])]);
    }
    // Gauss-Jordan on the left d x d block with partial pivoting
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        double best = 0.0;
        for (int r = col; r < d; ++r) {
            double sz = detail::scalar_size(aug[static_cast<size_t>(r)][static_cast<size_t>(col)]);
            if (sz > best) {
                best = sz;
                piv = r;
            }
        }
        if (piv < 0 || detail::scalar_zero(aug[static_cast<size_t>(piv)][static_cast<size_t>(col)],
                                           1e-9))
            throw NotTransversal("matrix_from_plane: plane not transversal to W1");
        std::swap(aug[static_cast<size_t>(col)], aug[static_cast<size_t>(piv)]);
        Scalar p = aug[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (auto& v : aug[static_cast<size_t>(col)]) v = v / p;
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            Scalar f = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (detail::scalar_zero(f, 0.0)) continue;
            for (size_t c = 0; c < aug[static_cast<size_t>(r)].size(); ++c)
                aug[static_cast<size_t>(r)][c] =
                    aug[static_cast<size_t>(r)][c] - f * aug[static_cast<size_t>(col)][c];
        }
    }
    // after elimination, row r of the right block holds row r of B^-1 C,
    // i.e. entry (r, i) = value of a[i][r]
    PlaneMatrix<Scalar> out;
    out.chart = chart;
    out.a.assign(nd, std::vector<Scalar>(static_cast<size_t>(d), Scalar(0)));
    for (size_t i = 0; i < nd; ++i)
        for (int j = 0; j < d; ++j)
            out.a[i][static_cast<size_t>(j)] =
                aug[static_cast<size_t>(j)][static_cast<size_t>(d) + i];
    return out;
}

// v lies on the graph plane iff v[w1[i]] = sum_j a[i][j] v[w0[j]] for all i.
template <typename Scalar>
bool contains_subspace(const PlaneMatrix<Scalar>& p, const PlaneBasis<Scalar>& V,
                       double tol = 1e-9) {
    if (V.n != p.chart.n) throw InputError("contains_subspace: ambient dimension mismatch");
    for (const auto& v : V.cols) {
        double scale = 0.0;
        for (const auto& x : v) scale = std::max(scale, detail::scalar_size(x));
        for (size_t i = 0; i < p.a.size(); ++i) {
            Scalar acc = v[static_cast<size_t>(p.chart.w1[i])];
            for (int j = 0; j < p.chart.d; ++j)
                acc = acc - p.a[i][static_cast<size_t>(j)] *
                                v[static_cast<size_t>(p.chart.w0[j])];
            if (!detail::scalar_zero(acc, tol * std::max(1.0, scale))) return false;
        }
    }
    return true;
}

using ExactPlaneMatrix = PlaneMatrix<GaussRat>;
using ExactPlaneBasis = PlaneBasis<GaussRat>;
using NumericPlaneMatrix = PlaneMatrix<std::complex<double>>;
using NumericPlaneBasis = PlaneBasis<std::complex<double>>;

}  // namespace cds::grassmann
