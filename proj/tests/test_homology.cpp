#include <numeric>
#include <random>

#include "doctest.h"
#include "qah/cells.hpp"
#include "qah/homology.hpp"

using namespace qah;

namespace {

SparseIntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<MatrixEntry> e;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] != 0) e.push_back({r, c, mpz_class(rows[r][c])});
    return SparseIntMatrix::from_triplets(rows.size(), cols, std::move(e));
}

// Cofactor expansion, for tiny matrices only.
mpz_class leibniz(const DenseMatrix& a) {
    const std::size_t k = a.size();
    if (k == 0) return 1;
    if (k == 1) return a[0][0];
    mpz_class s = 0;
    for (std::size_t c = 0; c < k; ++c) {
        DenseMatrix m;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<mpz_class> row;
            for (std::size_t cc = 0; cc < k; ++cc)
                if (cc != c) row.push_back(a[r][cc]);
            m.push_back(row);
        }
        s += (c % 2 ? -1 : 1) * a[0][c] * leibniz(m);
    }
    return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors, s_k = d_k / d_{k-1}.
std::vector<mpz_class> minor_oracle(const DenseMatrix& a, std::size_t rows, std::size_t cols) {
    std::vector<mpz_class> out;
    mpz_class prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        mpz_class g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                DenseMatrix m(k, std::vector<mpz_class>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) m[i][j] = a[r[i]][c[j]];
                mpz_class d = leibniz(m);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

}  // namespace

TEST_CASE("smith normal form of a textbook matrix") {
    const auto m = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    const SnfResult r = smith_normal_form(m);
    REQUIRE(r.d.size() == 3);
    CHECK(r.d[0] == 2);
    CHECK(r.d[1] == 6);
    CHECK(r.d[2] == 12);
    CHECK(verify_snf(m, r));
    CHECK(invariant_factors(m) == std::vector<mpz_class>{2, 6, 12});
}

TEST_CASE("smith normal form of rectangular and degenerate matrices") {
    const auto z = from_rows({{0, 0}, {0, 0}, {0, 0}});
    CHECK(verify_snf(z, smith_normal_form(z)));
    CHECK(invariant_factors(z).empty());
    CHECK(matrix_rank(z) == 0);
    const auto m = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}});
    CHECK(verify_snf(m, smith_normal_form(m)));
    CHECK(matrix_rank(m) == 1);
    const SparseIntMatrix empty = SparseIntMatrix::from_triplets(0, 3, {});
    CHECK(matrix_rank(empty) == 0);
}

TEST_CASE("invariant factors agree with determinantal divisors") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> val(-4, 4), dim(1, 4), zero(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
        for (auto& row : a)
            for (auto& x : row) x = zero(rng) == 0 ? 0 : val(rng);
        const auto m = from_rows(a);
        const SnfResult r = smith_normal_form(m);
        CHECK(verify_snf(m, r));
        const auto oracle = minor_oracle(to_dense(m), m.rows, m.cols);
        std::vector<mpz_class> got;
        for (const auto& d : invariant_factors(m)) got.push_back(abs(d));
        CHECK(got == oracle);
        CHECK(matrix_rank(m) == oracle.size());
        CHECK(bareiss_rank(to_dense(m)) == oracle.size());
    }
}

TEST_CASE("determinant against cofactor expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> val(-9, 9);
    for (int k = 0; k <= 5; ++k)
        for (int trial = 0; trial < 20; ++trial) {
            DenseMatrix a(k, std::vector<mpz_class>(k));
            for (auto& row : a)
                for (auto& x : row) x = val(rng);
            CHECK(determinant(a) == leibniz(a));
        }
}

TEST_CASE("sparse rank against dense rank on larger matrices") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> val(-2, 2), pick(0, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<long>> a(12, std::vector<long>(15));
        for (auto& row : a)
            for (auto& x : row) x = pick(rng) == 0 ? val(rng) : 0;
        // duplicate a few rows so the rank drops
        a[3] = a[1];
        for (std::size_t c = 0; c < 15; ++c) a[7][c] = a[2][c] - 2 * a[5][c];
        const auto m = from_rows(a);
        CHECK(matrix_rank(m) == bareiss_rank(to_dense(m)));
    }
}

TEST_CASE("boundary matrices compose to zero") {
    for (int n = 0; n <= 2; ++n) {
        const Complex cx(n);
        for (Filter f : {Filter::EQ_ONLY, Filter::RELATIVE, Filter::ALL})
            for (int d = 1; d < cx.max_degree(); ++d) {
                const auto a = to_dense(cx.boundary_matrix(d, f));
                const auto b = to_dense(cx.boundary_matrix(d + 1, f));
                const auto p = multiply(a, b, cx.basis(d, f).size());
                for (const auto& row : p)
                    for (const auto& x : row) CHECK(x == 0);
            }
    }
}

TEST_CASE("filters partition the cells") {
    for (int n = 0; n <= 2; ++n) {
        const Complex cx(n);
        for (int d = 0; d <= cx.max_degree(); ++d)
            CHECK(cx.basis(d, Filter::ALL).size() ==
                  cx.basis(d, Filter::EQ_ONLY).size() + cx.basis(d, Filter::RELATIVE).size());
        CHECK_THROWS(cx.basis(-1, Filter::ALL));
        CHECK_THROWS(cx.basis(n + 2, Filter::ALL));
    }
}

TEST_CASE("Euler characteristic matches homology") {
    for (int n = 0; n <= 2; ++n) {
        const Complex cx(n);
        for (Filter f : {Filter::EQ_ONLY, Filter::RELATIVE, Filter::ALL}) {
            long cells = 0, ranks = 0;
            for (int d = 0; d <= cx.max_degree(); ++d) {
                const long sign = d % 2 ? -1 : 1;
                cells += sign * static_cast<long>(cx.basis(d, f).size());
                ranks += sign * static_cast<long>(cx.homology_group(d, f).free_rank);
            }
            CHECK(cells == ranks);
        }
    }
}

TEST_CASE("homology of the union, the filled complex and the pair") {
    // The union of the n+1 spheres has H_0 = Z and H_n free of rank 2^{n+1} - 1; the filled
    // complex retracts to a point, so the pair carries that rank one degree up.
    for (int n = 1; n <= 2; ++n) {
        const Complex cx(n);
        const std::size_t r = (std::size_t{1} << (n + 1)) - 1;
        for (int d = 0; d <= n + 1; ++d) {
            const HomologyGroup eq = cx.homology_group(d, Filter::EQ_ONLY);
            const HomologyGroup all = cx.homology_group(d, Filter::ALL);
            const HomologyGroup rel = cx.homology_group(d, Filter::RELATIVE);
            INFO("n=" << n << " d=" << d);
            CHECK(eq.torsion.empty());
            CHECK(all.torsion.empty());
            CHECK(rel.torsion.empty());
            CHECK(eq.free_rank == (d == 0 ? 1 : d == n ? r : 0));
            CHECK(all.free_rank == (d == 0 ? 1 : 0));
            CHECK(rel.free_rank == (d == n + 1 ? r : 0));
        }
    }
    const Complex c0(0);
    CHECK(c0.homology_group(0, Filter::EQ_ONLY).free_rank == 2);
    CHECK(c0.homology_group(0, Filter::ALL).free_rank == 1);
    CHECK(c0.homology_group(1, Filter::RELATIVE).free_rank == 1);
}

TEST_CASE("cycles and boundaries") {
    const int n = 1;
    const Complex cx(n);
    const IntChain e = generator_e(0b01, n);
    CHECK(cx.is_cycle(e, Filter::EQ_ONLY));
    CHECK_FALSE(cx.is_boundary(e, Filter::EQ_ONLY));
    CHECK(cx.is_boundary(e, Filter::ALL));
    CHECK(cx.is_boundary(boundary(generator_E(0b11, n)), Filter::EQ_ONLY) == false);
    CHECK(cx.is_cycle(generator_E(0b11, n), Filter::RELATIVE));
    CHECK(cx.is_boundary(2 * e - 2 * e, Filter::EQ_ONLY));
}
