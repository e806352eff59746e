// Domain geometry and the sine-basis parameterization of scattering
// potentials on Omega = [-pi/2, pi/2]^2, plus mollification and the
// coefficient-space error metric.
//
// Nodes are cell-centered, x_a = -pi/2 + (a + 1/2) h with h = pi/n. On these
// nodes the discrete sine transform is exactly orthogonal,
//   sum_a sin(i (a+1/2) pi/n) sin(i' (a+1/2) pi/n) = (n/2) delta_{ii'},
// for 1 <= i, i' <= n-1, which makes project_sine_basis an exact left inverse
// of eval_sine_basis (up to rounding) whenever the order stays below n.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "ainv/common.hpp"

namespace ainv {

struct Grid {
    int n = 0;  // points per axis

    explicit Grid(int n_points) : n(n_points) {
        if (n < 8) throw std::invalid_argument("Grid: n must be >= 8");
    }

    double h() const { return kPi / n; }
    // Cell-centered node coordinate along either axis.
    double node(int a) const { return -kPi / 2.0 + (a + 0.5) * h(); }

    bool operator==(const Grid& other) const { return n == other.n; }
};

// Scattering potential q sampled at grid nodes; values(a, b) = q(x_a, y_b).
struct FieldGrid {
    Grid grid;
    Eigen::MatrixXd values;

    explicit FieldGrid(const Grid& g) : grid(g), values(Eigen::MatrixXd::Zero(g.n, g.n)) {}
    FieldGrid(const Grid& g, Eigen::MatrixXd v) : grid(g), values(std::move(v)) {
        if (values.rows() != g.n || values.cols() != g.n)
            throw std::invalid_argument("FieldGrid: values shape does not match grid");
    }

    bool finite() const { return values.allFinite(); }
};

// Coefficients of sum_{i,j} c(i,j) sin(i(x+pi/2)) sin(j(y+pi/2)), 1 <= i,j <= N.
// Storage is row-major in (i, j) with i fastest: index = (j-1)*N + (i-1).
struct SineCoeffs {
    int order = 0;  // N
    Eigen::VectorXd coeffs;

    explicit SineCoeffs(int N) : order(N), coeffs(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(N) * N)) {
        if (N < 1) throw std::invalid_argument("SineCoeffs: order must be >= 1");
    }
    SineCoeffs(int N, Eigen::VectorXd c) : order(N), coeffs(std::move(c)) {
        if (N < 1) throw std::invalid_argument("SineCoeffs: order must be >= 1");
        if (coeffs.size() != static_cast<Eigen::Index>(N) * N)
            throw std::invalid_argument("SineCoeffs: coefficient vector must have length N^2");
    }

    double& at(int i, int j) { return coeffs[static_cast<Eigen::Index>(j - 1) * order + (i - 1)]; }
    double at(int i, int j) const { return coeffs[static_cast<Eigen::Index>(j - 1) * order + (i - 1)]; }
};

// S(i-1, a) = sin(i (x_a + pi/2)), the sampled 1D basis table shared by
// evaluation and projection.
inline Eigen::MatrixXd sine_basis_table(int N, const Grid& g) {
    Eigen::MatrixXd S(N, g.n);
    const double h = g.h();
    for (int i = 1; i <= N; ++i)
        for (int a = 0; a < g.n; ++a) S(i - 1, a) = std::sin(i * (a + 0.5) * h);
    return S;
}

// values(a,b) = sum_{i,j} c(i,j) sin(i(x_a+pi/2)) sin(j(y_b+pi/2)).
inline FieldGrid eval_sine_basis(const SineCoeffs& c, const Grid& g) {
    const Eigen::MatrixXd S = sine_basis_table(c.order, g);
    Eigen::Map<const Eigen::MatrixXd> C(c.coeffs.data(), c.order, c.order);  // C(i-1, j-1)
    FieldGrid out(g);
    out.values = S.transpose() * C * S;
    return out;
}

// L2(Omega)-orthogonal projection by node quadrature:
//   c(i,j) = (4/pi^2) h^2 sum_{a,b} values(a,b) sin(i(x_a+pi/2)) sin(j(y_b+pi/2)).
inline SineCoeffs project_sine_basis(const FieldGrid& f, int N) {
    if (N < 1) throw std::invalid_argument("project_sine_basis: order must be >= 1");
    if (N > f.grid.n) throw std::invalid_argument("project_sine_basis: order exceeds grid resolution");
    const Eigen::MatrixXd S = sine_basis_table(N, f.grid);
    const double h = f.grid.h();
    const double scale = 4.0 / (kPi * kPi) * h * h;
    Eigen::MatrixXd C = scale * (S * f.values * S.transpose());
    SineCoeffs out(N);
    out.coeffs = Eigen::Map<Eigen::VectorXd>(C.data(), C.size());
    return out;
}

// Discrete convolution with a normalized Gaussian of standard deviation
// eps_m, truncated at 4*eps_m and renormalized to unit mass. Boundary is
// zero-padded (potentials are compactly supported). Separable: two 1D passes.
inline FieldGrid mollify(const FieldGrid& f, double eps_m) {
    if (!(eps_m > 0.0)) throw std::invalid_argument("mollify: eps_m must be positive");
    const int n = f.grid.n;
    const double h = f.grid.h();
    const int radius = static_cast<int>(std::floor(4.0 * eps_m / h));
    Eigen::VectorXd w(2 * radius + 1);
    for (int d = -radius; d <= radius; ++d)
        w[d + radius] = std::exp(-0.5 * (d * h) * (d * h) / (eps_m * eps_m));
    w /= w.sum();

    Eigen::MatrixXd tmp = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int d = -radius; d <= radius; ++d) {
            const int src = a - d;
            if (src < 0 || src >= n) continue;
            tmp.row(a) += w[d + radius] * f.values.row(src);
        }
    FieldGrid out(f.grid);
    for (int b = 0; b < n; ++b)
        for (int d = -radius; d <= radius; ++d) {
            const int src = b - d;
            if (src < 0 || src >= n) continue;
            out.values.col(b) += w[d + radius] * tmp.col(src);
        }
    return out;
}

// ||pred - truth||_2 / ||truth||_2 in coefficient space.
inline double relative_l2(const SineCoeffs& pred, const SineCoeffs& truth) {
    if (pred.order != truth.order)
        throw std::invalid_argument("relative_l2: mismatched sine-basis orders");
    const double denom = truth.coeffs.norm();
    if (denom == 0.0) throw std::invalid_argument("relative_l2: truth coefficients are identically zero");
    return (pred.coeffs - truth.coeffs).norm() / denom;
}

}  // namespace ainv
