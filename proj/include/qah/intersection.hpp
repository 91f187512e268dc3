#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qah/cells.hpp"

namespace qah {

// det of the matrix with columns v_1, ..., v_k omitted, ..., v_{n+1}, v.
long basis_change_det(int n, int k);

// Orientation of an (n+1)-dimensional "<=" cell over a single center, relative to the
// standard orientation of R^{n+1}: (-1)^{n+1} * (signs of its cone) * basis_change_det.
int top_cell_orientation(const Cell& c, int n);

// Signed count of transverse points of E with (i*R)^{n+1} - eps*u (eps small, u generic).
int transverse_index(const IntChain& E, int n, const Eigen::VectorXd& u);

struct DisjointnessWitness {
    Cell cell;
    int label = 0;  // label outside I with a nonnegative cone coefficient on the cell
};

struct IndexCertificate {
    Mask I = 0;
    int n = 0;
    int value = 0;
    // "orientation" (|I| = 1), "disjoint" (witness for every cell) or "transverse".
    std::string method;
    bool certified = false;

    // |I| = 1: the positively oriented top cell, its coefficient and the two signs.
    Coeff cell_coeff = 0;
    int cell_sign = 0;  // coefficient times the cone orientation factor
    long det = 0;

    // |I| >= 2
    std::vector<DisjointnessWitness> witnesses;
    std::vector<Cell> unwitnessed;
    int transverse = 0;
};

IndexCertificate index_with_imaginary(Mask I, int n);

// 2 (-1)^{k/2} for k even, 0 for k odd.
int sphere_self_intersection(int k);
int pl_sign(int n, int m);
// (-1)^{N k + N(N+1)/2}
int duality_sign(int N, int k);

struct VanishingPairing {
    int value = 0;
    int closed_form = 0;
    int lambda = 0;  // cell's iterated boundary as a multiple of the sphere's
    int duality = 0;
    int self = 0;
    int k = 0;
};

VanishingPairing vanishing_pair_index(Mask sphere_I, Mask cell_I, int n);
int vanishing_closed_form(Mask sphere_I, Mask cell_I, int n);

}  // namespace qah
