#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "qah/cells.hpp"

namespace qah {

enum class Filter { EQ_ONLY, RELATIVE, ALL };

const char* filter_name(Filter f);

struct MatrixEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    mpz_class value;
};

struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    // Sorted by (row, col), no zeros, no duplicates.
    std::vector<MatrixEntry> entries;

    static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);
};

using DenseMatrix = std::vector<std::vector<mpz_class>>;

DenseMatrix to_dense(const SparseIntMatrix& m);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, std::size_t inner);

struct SnfResult {
    std::vector<mpz_class> d;  // min(rows, cols) diagonal entries
    DenseMatrix u;             // rows x rows
    DenseMatrix v;             // cols x cols
};

SnfResult smith_normal_form(const SparseIntMatrix& m);
// Checks u*A*v = diag(d), the divisor chain and unimodularity of u and v.
bool verify_snf(const SparseIntMatrix& m, const SnfResult& r);

// Fraction-free elimination on a dense copy.
mpz_class determinant(DenseMatrix a);
std::size_t bareiss_rank(DenseMatrix a);
std::size_t matrix_rank(const SparseIntMatrix& m);
// Nonzero invariant factors in increasing divisibility order (units included).
std::vector<mpz_class> invariant_factors(const SparseIntMatrix& m);

struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;
};

// The cell complex of one n with its degree-wise bases under each filter.
class Complex {
public:
    explicit Complex(int n);

    int n() const { return n_; }
    int max_degree() const { return n_ + 1; }
    // All enumerated cells, void ones included, in canonical order.
    const std::vector<Cell>& all_cells() const { return all_; }
    const std::vector<Cell>& basis(int degree, Filter f) const;
    std::size_t position(const Cell& c, Filter f) const;  // throws if absent

    SparseIntMatrix boundary_matrix(int degree, Filter f) const;
    // Coefficient vector in basis(degree, f). EQ_ONLY rejects LE cells; RELATIVE drops EQ cells.
    std::vector<mpz_class> to_vector(const IntChain& c, int degree, Filter f) const;

    HomologyGroup homology_group(int degree, Filter f) const;
    bool is_cycle(const IntChain& c, Filter f) const;
    bool is_boundary(const IntChain& c, Filter f) const;
    std::size_t class_rank(const std::vector<IntChain>& cycles, Filter f) const;

private:
    void check_degree(int degree) const;

    int n_;
    std::vector<Cell> all_;
    // [filter][degree]
    std::vector<std::vector<std::vector<Cell>>> bases_;
    std::vector<std::vector<std::map<Cell, std::size_t>>> positions_;
};

}  // namespace qah
