#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qah/combinatorics.hpp"

namespace qah::geo {

using Point = Eigen::VectorXcd;
using Vec = Eigen::VectorXd;

// Unit spheres centered at a_j = i*e_j, j = 1..n+1.
Point sphere_center(int label, int n);
// c_I: i/|I| on the labels of I.
Point center(Mask I, int n);

struct ConeBasis {
    Vec v;
    std::vector<Vec> vj;  // vj[j-1] = v - e_j
};
ConeBasis cone_basis(int n);

// Columns v_j (j in J, increasing) followed by v when tau != 0.
Eigen::MatrixXd cone_matrix(const CellIndex& i, int tau, int n);
// Sign each cone coefficient is constrained to.
std::vector<int> cone_signs(const CellIndex& i, int tau);
Eigen::MatrixXd gram_matrix(const CellIndex& i, int tau, int n);
// Upper triangular M with M^T M = Gram.
Eigen::MatrixXd gram_factor(const CellIndex& i, int tau, int n);

// h(x) = (|x|_2/|x|_1) * (s_1 x_1, ..., s_m x_m), from the signed orthant part of the unit
// ball onto the corner simplex {y >= 0, sum y <= 1}.
Vec corner_map(const Vec& x, const std::vector<int>& signs);
Vec corner_map_inverse(const Vec& y, const std::vector<int>& signs);

// corner: point of the corner simplex (sum = 1 for "=" cells); weights: barycentric over
// the flag's centers.
Point param_point(const CellIndex& i, int tau, const Vec& corner, const Vec& weights, int n);

constexpr double kTol = 1e-9;

bool cell_membership(const Point& z, const CellIndex& i, int tau, int n, double tol = kTol);
// Relative interior: strict inequalities wherever the closed cell has them.
bool cell_interior(const Point& z, const CellIndex& i, int tau, int n, double tol = kTol);

// g(z,t) = f(z,t) Re z + i (1-t) Im z on the complex unit sphere z^2 = 1.
Point retraction_step(const Point& z, double t);
std::complex<double> bilinear_square(const Point& z);

struct GeneralPositionReport {
    bool ok = true;
    double min_singular = 0;
    double max_residual = 0;
    int samples = 0;
    std::uint64_t seed = 0;
};
// Samples points of the intersection of the spheres in I and checks that the gradients
// 2(z - a_i), i in I, are linearly independent.
GeneralPositionReport check_general_position(Mask I, int n, int samples, std::uint64_t seed);

}  // namespace qah::geo
