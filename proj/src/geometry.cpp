#include "qah/geometry.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace qah::geo {

namespace {

const std::complex<double> I_UNIT(0.0, 1.0);

void check_label_range(Mask m, int n) {
    if (m == 0) throw std::invalid_argument("empty label set");
    if ((m & ~full_mask(n)) != 0) throw std::invalid_argument("label outside 1..n+1");
}

// Coefficients of x in the basis v, v_j (j != skip), ordered as v first then increasing j.
Vec basis_coefficients(const Vec& x, int skip, int n) {
    const ConeBasis b = cone_basis(n);
    Eigen::MatrixXd B(n + 1, n + 1);
    B.col(0) = b.v;
    int col = 1;
    for (int j = 1; j <= n + 1; ++j)
        if (j != skip) B.col(col++) = b.vj[j - 1];
    return B.fullPivLu().solve(x);
}

struct Split {
    Vec weights;
    double hull_residual = 0;
    Vec cone;  // indexed like basis_coefficients
};

Split split_point(const Point& z, const CellIndex& i, int n) {
    const int k = static_cast<int>(i.flag.size());
    Eigen::MatrixXd A(n + 2, k);
    for (int l = 0; l < k; ++l) {
        A.block(0, l, n + 1, 1) = center(i.flag[l], n).imag();
        A(n + 1, l) = 1.0;
    }
    Vec rhs(n + 2);
    rhs.head(n + 1) = z.imag();
    rhs(n + 1) = 1.0;
    Split s;
    s.weights = A.colPivHouseholderQr().solve(rhs);
    s.hull_residual = (A * s.weights - rhs).norm();
    s.cone = basis_coefficients(z.real(), min_label(i.flag.front()), n);
    return s;
}

int coefficient_slot(int j, int skip) { return j < skip ? j : j - 1; }

}  // namespace

Point sphere_center(int label, int n) {
    if (label < 1 || label > n + 1) throw std::invalid_argument("label outside 1..n+1");
    Point a = Point::Zero(n + 1);
    a(label - 1) = I_UNIT;
    return a;
}

Point center(Mask I, int n) {
    check_label_range(I, n);
    Point c = Point::Zero(n + 1);
    const double w = 1.0 / popcount(I);
    for (int l : labels_of(I)) c(l - 1) = I_UNIT * w;
    return c;
}

ConeBasis cone_basis(int n) {
    ConeBasis b;
    b.v = Vec::Ones(n + 1);
    for (int j = 1; j <= n + 1; ++j) {
        Vec vj = b.v;
        vj(j - 1) = 0.0;
        b.vj.push_back(vj);
    }
    return b;
}

Eigen::MatrixXd cone_matrix(const CellIndex& i, int tau, int n) {
    const ConeBasis b = cone_basis(n);
    const std::vector<int> J = labels_of(i.j());
    const int m = static_cast<int>(J.size()) + (tau != 0 ? 1 : 0);
    Eigen::MatrixXd C(n + 1, m);
    for (std::size_t l = 0; l < J.size(); ++l) C.col(static_cast<Eigen::Index>(l)) = b.vj[J[l] - 1];
    if (tau != 0) C.col(m - 1) = b.v;
    return C;
}

std::vector<int> cone_signs(const CellIndex& i, int tau) {
    std::vector<int> s;
    for (int j : labels_of(i.j())) s.push_back(has(i.j_le, j) ? -1 : 1);
    if (tau != 0) s.push_back(tau);
    return s;
}

Eigen::MatrixXd gram_matrix(const CellIndex& i, int tau, int n) {
    const Eigen::MatrixXd C = cone_matrix(i, tau, n);
    return C.transpose() * C;
}

Eigen::MatrixXd gram_factor(const CellIndex& i, int tau, int n) {
    const Eigen::MatrixXd G = gram_matrix(i, tau, n);
    if (G.rows() == 0) throw std::invalid_argument("gram_factor needs |J| + |tau| >= 1");
    Eigen::LLT<Eigen::MatrixXd> llt(G);
    if (llt.info() != Eigen::Success) throw std::runtime_error("Gram matrix not positive definite");
    return llt.matrixU();
}

Vec corner_map(const Vec& x, const std::vector<int>& signs) {
    if (static_cast<std::size_t>(x.size()) != signs.size()) throw std::invalid_argument("corner_map size mismatch");
    for (Eigen::Index l = 0; l < x.size(); ++l)
        if (signs[l] * x(l) < -kTol) throw std::domain_error("corner_map input outside the orthant");
    const double l2 = x.norm();
    if (l2 > 1.0 + kTol) throw std::domain_error("corner_map input outside the unit ball");
    Vec y = Vec::Zero(x.size());
    const double l1 = x.lpNorm<1>();
    if (l1 == 0.0) return y;
    for (Eigen::Index l = 0; l < x.size(); ++l) y(l) = std::max(0.0, signs[l] * x(l)) * (l2 / l1);
    return y;
}

Vec corner_map_inverse(const Vec& y, const std::vector<int>& signs) {
    if (static_cast<std::size_t>(y.size()) != signs.size()) throw std::invalid_argument("corner_map size mismatch");
    for (Eigen::Index l = 0; l < y.size(); ++l)
        if (y(l) < -kTol) throw std::domain_error("corner simplex coordinates must be nonnegative");
    const double l1 = y.lpNorm<1>();
    if (l1 > 1.0 + kTol) throw std::domain_error("corner simplex coordinates sum above 1");
    Vec x = Vec::Zero(y.size());
    const double l2 = y.norm();
    if (l2 == 0.0) return x;
    for (Eigen::Index l = 0; l < y.size(); ++l) x(l) = signs[l] * std::max(0.0, y(l)) * (l1 / l2);
    return x;
}

Point param_point(const CellIndex& i, int tau, const Vec& corner, const Vec& weights, int n) {
    if (!valid_index(i, n)) throw std::invalid_argument("invalid cell index");
    const std::vector<int> signs = cone_signs(i, tau);
    const auto m = static_cast<Eigen::Index>(signs.size());
    if (i.rel == Rel::EQ && m == 0) throw std::domain_error("the void cell has no points");
    if (corner.size() != m) throw std::domain_error("corner coordinates have the wrong dimension");
    if (weights.size() != static_cast<Eigen::Index>(i.flag.size()))
        throw std::domain_error("one barycentric weight per flag set");
    if ((weights.array() < -kTol).any() || std::abs(weights.sum() - 1.0) > kTol)
        throw std::domain_error("barycentric weights outside the simplex");
    if (i.rel == Rel::EQ && std::abs(corner.sum() - 1.0) > kTol)
        throw std::domain_error("\"=\" cells take points of the outer face");

    Vec y = Vec::Zero(n + 1);
    for (std::size_t l = 0; l < i.flag.size(); ++l) y += weights(static_cast<Eigen::Index>(l)) * center(i.flag[l], n).imag();
    Point z(n + 1);
    if (m == 0) {
        z = I_UNIT * y.cast<std::complex<double>>();
        return z;
    }
    const int j0 = min_label(i.flag.front());
    Vec yj = y;
    yj(j0 - 1) -= 1.0;
    const double radius = std::sqrt(1.0 + yj.squaredNorm());

    const Vec w = corner_map_inverse(corner, signs);
    Vec d = Vec::Zero(m);
    const Eigen::MatrixXd M = gram_factor(i, tau, n);
    const double mw = (M * w).norm();
    if (mw > 0.0) d = (radius * w.norm() / mw) * w;
    const Vec x = cone_matrix(i, tau, n) * d;
    for (int r = 0; r <= n; ++r) z(r) = std::complex<double>(x(r), y(r));
    return z;
}

std::complex<double> bilinear_square(const Point& z) { return (z.array() * z.array()).sum(); }

namespace {

bool membership_impl(const Point& z, const CellIndex& i, int tau, int n, double tol, bool strict) {
    if (!valid_index(i, n) || z.size() != n + 1) return false;
    if (i.rel == Rel::EQ && i.j() == 0 && tau == 0) return false;
    const Split s = split_point(z, i, n);
    if (s.hull_residual > tol) return false;
    for (Eigen::Index l = 0; l < s.weights.size(); ++l)
        if (strict ? s.weights(l) <= tol : s.weights(l) < -tol) return false;

    const int skip = min_label(i.flag.front());
    for (int j = 1; j <= n + 1; ++j) {
        if (j == skip) continue;
        const double c = s.cone(coefficient_slot(j, skip));
        if (has(i.j_le, j)) {
            if (strict ? c >= -tol : c > tol) return false;
        } else if (has(i.j_ge, j)) {
            if (strict ? c <= tol : c < -tol) return false;
        } else if (std::abs(c) > tol) {
            return false;
        }
    }
    const double cv = s.cone(0);
    if (tau == 0 ? std::abs(cv) > tol : (strict ? tau * cv <= tol : tau * cv < -tol)) return false;

    const std::complex<double> q = bilinear_square(z - sphere_center(skip, n));
    if (std::abs(q.imag()) > tol) return false;
    if (i.rel == Rel::EQ) return std::abs(q.real() - 1.0) <= tol;
    return strict ? q.real() < 1.0 - tol : q.real() <= 1.0 + tol;
}

}  // namespace

bool cell_membership(const Point& z, const CellIndex& i, int tau, int n, double tol) {
    return membership_impl(z, i, tau, n, tol, false);
}

bool cell_interior(const Point& z, const CellIndex& i, int tau, int n, double tol) {
    return membership_impl(z, i, tau, n, tol, true);
}

Point retraction_step(const Point& z, double t) {
    if (t < 0.0 || t > 1.0) throw std::domain_error("t outside [0,1]");
    if (std::abs(bilinear_square(z) - 1.0) > kTol) throw std::domain_error("point not on the complex unit sphere");
    const Vec x = z.real();
    const Vec y = z.imag();
    const double f = std::sqrt((1.0 + (1.0 - t) * (1.0 - t) * y.squaredNorm()) / x.squaredNorm());
    Point g(z.size());
    for (Eigen::Index r = 0; r < z.size(); ++r) g(r) = std::complex<double>(f * x(r), (1.0 - t) * y(r));
    return g;
}

GeneralPositionReport check_general_position(Mask I, int n, int samples, std::uint64_t seed) {
    check_label_range(I, n);
    GeneralPositionReport rep;
    rep.seed = seed;
    rep.samples = samples;
    rep.min_singular = std::numeric_limits<double>::infinity();
    const std::vector<int> labels = labels_of(I);
    const int p = static_cast<int>(labels.size());
    // On the intersection all coordinates labelled by I agree, which leaves a complex sphere
    // of squared radius 2 - 1/|I| around c_I inside the subspace below.
    const double r2 = 2.0 - 1.0 / p;
    std::vector<Vec> basis;
    Vec u0 = Vec::Zero(n + 1);
    for (int l : labels) u0(l - 1) = 1.0 / std::sqrt(static_cast<double>(p));
    basis.push_back(u0);
    for (int j = 1; j <= n + 1; ++j)
        if (!has(I, j)) basis.push_back(Vec::Unit(n + 1, j - 1));
    const auto dim = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd Q(n + 1, dim);
    for (Eigen::Index c = 0; c < dim; ++c) Q.col(c) = basis[static_cast<std::size_t>(c)];

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    const Point c = center(I, n);
    for (int s = 0; s < samples; ++s) {
        Vec y(dim), x(dim);
        for (Eigen::Index r = 0; r < dim; ++r) y(r) = gauss(rng);
        for (Eigen::Index r = 0; r < dim; ++r) x(r) = gauss(rng);
        if (dim == 1) {
            y.setZero();
        } else {
            x -= (x.dot(y) / y.squaredNorm()) * y;
        }
        x *= std::sqrt(r2 + y.squaredNorm()) / x.norm();
        Point z = c;
        for (int r = 0; r <= n; ++r) z(r) += std::complex<double>(Q.row(r).dot(x), Q.row(r).dot(y));

        Eigen::MatrixXcd grad(n + 1, p);
        for (int l = 0; l < p; ++l) {
            const Point diff = z - sphere_center(labels[l], n);
            grad.col(l) = 2.0 * diff;
            rep.max_residual = std::max(rep.max_residual, std::abs(bilinear_square(diff) - 1.0));
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(grad);
        rep.min_singular = std::min(rep.min_singular, svd.singularValues().minCoeff());
    }
    if (samples <= 0) rep.min_singular = 0;
    rep.ok = samples > 0 && rep.min_singular > 1e-6 && rep.max_residual <= kTol;
    return rep;
}

}  // namespace qah::geo
