#include "qah/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace qah {

namespace {

using Row = std::map<std::size_t, mpz_class>;

// Sparse elimination restricted to pivots of absolute value one. Rows and columns of a
// pivot are removed; the discarded column operations keep every remaining row equivalent
// to the original matrix up to unimodular transformations. Columns >= pivot_limit are
// carried along but never pivoted on.
struct UnitReducer {
    std::vector<Row> rows;
    std::vector<std::set<std::size_t>> col_rows;
    std::size_t pivots = 0;

    UnitReducer(const SparseIntMatrix& m, std::size_t extra_cols) : rows(m.rows), col_rows(m.cols + extra_cols) {
        for (const auto& e : m.entries) {
            rows[e.row][e.col] = e.value;
            col_rows[e.col].insert(e.row);
        }
    }

    void set_entry(std::size_t r, std::size_t c, const mpz_class& v) {
        if (v == 0) return;
        rows[r][c] = v;
        col_rows[c].insert(r);
    }

    void axpy(std::size_t target, const mpz_class& f, std::size_t source) {
        Row& t = rows[target];
        for (const auto& [c, v] : rows[source]) {
            auto it = t.find(c);
            if (it == t.end()) {
                t.emplace(c, -f * v);
                col_rows[c].insert(target);
            } else {
                it->second -= f * v;
                if (it->second == 0) {
                    t.erase(it);
                    col_rows[c].erase(target);
                }
            }
        }
    }

    void run(std::size_t pivot_limit) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t c = 0; c < pivot_limit; ++c) {
                if (col_rows[c].empty()) continue;
                std::size_t best = rows.size();
                for (std::size_t r : col_rows[c]) {
                    const mpz_class& a = rows[r].at(c);
                    if (abs(a) != 1) continue;
                    if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
                }
                if (best == rows.size()) continue;
                const mpz_class p = rows[best].at(c);
                const std::vector<std::size_t> others(col_rows[c].begin(), col_rows[c].end());
                for (std::size_t r : others) {
                    if (r == best) continue;
                    axpy(r, rows[r].at(c) * p, best);
                }
                for (const auto& kv : rows[best]) col_rows[kv.first].erase(best);
                rows[best].clear();
                ++pivots;
                progress = true;
            }
        }
    }

    // Remaining nonzero rows restricted to the given column range, as a dense matrix.
    DenseMatrix residual(std::size_t col_begin, std::size_t col_end, std::vector<std::size_t>* kept_rows) const {
        std::vector<std::size_t> cols;
        for (std::size_t c = col_begin; c < col_end; ++c)
            if (!col_rows[c].empty()) cols.push_back(c);
        DenseMatrix out;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].empty()) continue;
            if (kept_rows) kept_rows->push_back(r);
            std::vector<mpz_class> row(cols.size());
            for (std::size_t k = 0; k < cols.size(); ++k) {
                auto it = rows[r].find(cols[k]);
                if (it != rows[r].end()) row[k] = it->second;
            }
            out.push_back(std::move(row));
        }
        return out;
    }
};

DenseMatrix identity(std::size_t k) {
    DenseMatrix m(k, std::vector<mpz_class>(k));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

std::size_t column_count(const DenseMatrix& a) { return a.empty() ? 0 : a[0].size(); }

// Smith form of a dense matrix in place. Transforms are tracked when u, v are given.
std::vector<mpz_class> dense_snf(DenseMatrix& a, DenseMatrix* u, DenseMatrix* v) {
    const std::size_t m = a.size();
    const std::size_t n = column_count(a);
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        if (u) std::swap((*u)[i], (*u)[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        if (v)
            for (auto& row : *v) std::swap(row[i], row[j]);
    };
    auto row_axpy = [&](std::size_t target, const mpz_class& f, std::size_t source) {
        for (std::size_t c = 0; c < n; ++c) a[target][c] -= f * a[source][c];
        if (u)
            for (std::size_t c = 0; c < m; ++c) (*u)[target][c] -= f * (*u)[source][c];
    };
    auto col_axpy = [&](std::size_t target, const mpz_class& f, std::size_t source) {
        for (std::size_t r = 0; r < m; ++r) a[r][target] -= f * a[r][source];
        if (v)
            for (std::size_t r = 0; r < n; ++r) (*v)[r][target] -= f * (*v)[r][source];
    };

    const std::size_t lim = std::min(m, n);
    std::size_t t = 0;
    for (; t < lim; ++t) {
        // Move the entry of least absolute value into the pivot position.
        auto place_min = [&](bool whole) {
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (!whole && i != t && j != t) continue;
                    if (a[i][j] == 0) continue;
                    if (bi == m || abs(a[i][j]) < abs(a[bi][bj])) bi = i, bj = j;
                }
            if (bi == m) return false;
            swap_rows(t, bi);
            swap_cols(t, bj);
            return true;
        };
        if (!place_min(true)) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_axpy(i, q, t);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_axpy(j, q, t);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                place_min(false);
                continue;
            }
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_axpy(t, -1, bad);
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t]) x = -x;
            if (u)
                for (auto& x : (*u)[t]) x = -x;
        }
    }
    std::vector<mpz_class> d(lim);
    for (std::size_t i = 0; i < lim; ++i) d[i] = a[i][i];
    return d;
}

bool is_unimodular(const DenseMatrix& a) {
    if (a.empty()) return true;
    return abs(determinant(a)) == 1;
}

}  // namespace

mpz_class determinant(DenseMatrix a) {
    if (a.empty()) return 1;
    const std::size_t k = a.size();
    mpz_class sign = 1, prev = 1;
    for (std::size_t t = 0; t < k; ++t) {
        std::size_t p = t;
        while (p < k && a[p][t] == 0) ++p;
        if (p == k) return 0;
        if (p != t) {
            std::swap(a[p], a[t]);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < k; ++i) {
            for (std::size_t j = t + 1; j < k; ++j) a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) / prev;
            a[i][t] = 0;
        }
        prev = a[t][t];
    }
    return sign * a[k - 1][k - 1];
}

const char* filter_name(Filter f) {
    switch (f) {
        case Filter::EQ_ONLY: return "eq";
        case Filter::RELATIVE: return "relative";
        case Filter::ALL: return "all";
    }
    return "?";
}

SparseIntMatrix SparseIntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries) {
    std::sort(entries.begin(), entries.end(), [](const MatrixEntry& x, const MatrixEntry& y) {
        return x.row != y.row ? x.row < y.row : x.col < y.col;
    });
    SparseIntMatrix m;
    m.rows = rows;
    m.cols = cols;
    for (auto& e : entries) {
        if (e.row >= rows || e.col >= cols) throw std::out_of_range("matrix entry out of range");
        if (!m.entries.empty() && m.entries.back().row == e.row && m.entries.back().col == e.col)
            m.entries.back().value += e.value;
        else
            m.entries.push_back(std::move(e));
        if (m.entries.back().value == 0) m.entries.pop_back();
    }
    return m;
}

DenseMatrix to_dense(const SparseIntMatrix& m) {
    DenseMatrix a(m.rows, std::vector<mpz_class>(m.cols));
    for (const auto& e : m.entries) a[e.row][e.col] = e.value;
    return a;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, std::size_t inner) {
    const std::size_t cols = column_count(b);
    DenseMatrix out(a.size(), std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

SnfResult smith_normal_form(const SparseIntMatrix& m) {
    DenseMatrix a = to_dense(m);
    SnfResult r;
    r.u = identity(m.rows);
    r.v = identity(m.cols);
    r.d = dense_snf(a, &r.u, &r.v);
    return r;
}

bool verify_snf(const SparseIntMatrix& m, const SnfResult& r) {
    if (r.d.size() != std::min(m.rows, m.cols)) return false;
    for (std::size_t i = 0; i < r.d.size(); ++i) {
        if (r.d[i] < 0) return false;
        if (i + 1 < r.d.size()) {
            if (r.d[i] == 0 && r.d[i + 1] != 0) return false;
            if (r.d[i] != 0 && r.d[i + 1] % r.d[i] != 0) return false;
        }
    }
    const DenseMatrix uav = multiply(multiply(r.u, to_dense(m), m.rows), r.v, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (uav[i][j] != (i == j ? r.d[i] : mpz_class(0))) return false;
    return is_unimodular(r.u) && is_unimodular(r.v);
}

std::size_t bareiss_rank(DenseMatrix a) {
    const std::size_t m = a.size();
    const std::size_t n = column_count(a);
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) a[i][j] = (a[i][j] * a[rank][c] - a[i][c] * a[rank][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::size_t matrix_rank(const SparseIntMatrix& m) {
    UnitReducer red(m, 0);
    red.run(m.cols);
    return red.pivots + bareiss_rank(red.residual(0, m.cols, nullptr));
}

std::vector<mpz_class> invariant_factors(const SparseIntMatrix& m) {
    UnitReducer red(m, 0);
    red.run(m.cols);
    std::vector<mpz_class> out(red.pivots, mpz_class(1));
    DenseMatrix rest = red.residual(0, m.cols, nullptr);
    for (const auto& d : dense_snf(rest, nullptr, nullptr))
        if (d != 0) out.push_back(d);
    return out;
}

Complex::Complex(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    all_ = enumerate_cells(n);
    const std::size_t degrees = static_cast<std::size_t>(n) + 2;
    bases_.assign(3, std::vector<std::vector<Cell>>(degrees));
    positions_.assign(3, std::vector<std::map<Cell, std::size_t>>(degrees));
    for (const Cell& c : all_) {
        if (is_void(c)) continue;
        const auto d = static_cast<std::size_t>(cell_degree(c));
        const bool eq = c.index.rel == Rel::EQ;
        for (Filter f : {Filter::EQ_ONLY, Filter::RELATIVE, Filter::ALL}) {
            if ((f == Filter::EQ_ONLY && !eq) || (f == Filter::RELATIVE && eq)) continue;
            auto& b = bases_[static_cast<int>(f)][d];
            positions_[static_cast<int>(f)][d].emplace(c, b.size());
            b.push_back(c);
        }
    }
}

void Complex::check_degree(int degree) const {
    if (degree < 0 || degree > max_degree())
        throw std::out_of_range("degree " + std::to_string(degree) + " outside 0.." + std::to_string(max_degree()));
}

const std::vector<Cell>& Complex::basis(int degree, Filter f) const {
    check_degree(degree);
    return bases_[static_cast<int>(f)][static_cast<std::size_t>(degree)];
}

std::size_t Complex::position(const Cell& c, Filter f) const {
    if (is_void(c)) throw std::invalid_argument("void cell has no basis position");
    const int d = cell_degree(c);
    check_degree(d);
    const auto& pos = positions_[static_cast<int>(f)][static_cast<std::size_t>(d)];
    auto it = pos.find(c);
    if (it == pos.end()) throw std::invalid_argument("cell not in the filtered basis");
    return it->second;
}

SparseIntMatrix Complex::boundary_matrix(int degree, Filter f) const {
    const auto& cols = basis(degree, f);
    if (degree == 0) return SparseIntMatrix{0, cols.size(), {}};
    const auto& rows = basis(degree - 1, f);
    const auto& pos = positions_[static_cast<int>(f)][static_cast<std::size_t>(degree - 1)];
    std::vector<MatrixEntry> entries;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const IntChain b = boundary_cell(cols[j]);
        for (const auto& [face, v] : b.terms()) {
            auto it = pos.find(face);
            if (it == pos.end()) {
                if (f == Filter::RELATIVE && face.index.rel == Rel::EQ) continue;
                throw std::logic_error("boundary leaves the filtered complex");
            }
            entries.push_back(MatrixEntry{it->second, j, mpz_class(static_cast<long>(v))});
        }
    }
    return SparseIntMatrix::from_triplets(rows.size(), cols.size(), std::move(entries));
}

std::vector<mpz_class> Complex::to_vector(const IntChain& c, int degree, Filter f) const {
    const auto& b = basis(degree, f);
    std::vector<mpz_class> out(b.size());
    if (c.empty()) return out;
    if (c.degree() != degree) throw std::invalid_argument("chain degree mismatch");
    const auto& pos = positions_[static_cast<int>(f)][static_cast<std::size_t>(degree)];
    for (const auto& [cell, v] : c.terms()) {
        auto it = pos.find(cell);
        if (it == pos.end()) {
            if (f == Filter::RELATIVE && cell.index.rel == Rel::EQ) continue;
            throw std::invalid_argument("chain has a cell outside the filtered complex");
        }
        out[it->second] = static_cast<long>(v);
    }
    return out;
}

HomologyGroup Complex::homology_group(int degree, Filter f) const {
    check_degree(degree);
    HomologyGroup h;
    const std::size_t cells = basis(degree, f).size();
    const std::size_t outgoing = degree == 0 ? 0 : matrix_rank(boundary_matrix(degree, f));
    std::vector<mpz_class> incoming;
    if (degree < max_degree()) incoming = invariant_factors(boundary_matrix(degree + 1, f));
    h.free_rank = cells - outgoing - incoming.size();
    for (const auto& d : incoming)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

bool Complex::is_cycle(const IntChain& c, Filter f) const {
    if (c.empty() || c.degree() == 0) return true;
    const int d = c.degree();
    to_vector(c, d, f);  // rejects cells outside the filter
    IntChain kept(d);
    for (const auto& [cell, v] : c.terms())
        if (!(f == Filter::RELATIVE && cell.index.rel == Rel::EQ)) kept.add(cell, v);
    for (const auto& x : to_vector(boundary(kept), d - 1, f))
        if (x != 0) return false;
    return true;
}

bool Complex::is_boundary(const IntChain& c, Filter f) const {
    if (!is_cycle(c, f)) throw std::invalid_argument("is_boundary needs a cycle");
    if (c.empty()) return true;
    const int d = c.degree();
    const std::vector<mpz_class> target = to_vector(c, d, f);
    if (d == max_degree()) {
        for (const auto& x : target)
            if (x != 0) return false;
        return true;
    }
    const SparseIntMatrix b = boundary_matrix(d + 1, f);
    UnitReducer red(b, 1);
    for (std::size_t r = 0; r < target.size(); ++r) red.set_entry(r, b.cols, target[r]);
    red.run(b.cols);
    std::vector<std::size_t> kept;
    DenseMatrix rest = red.residual(0, b.cols, &kept);
    std::vector<mpz_class> rhs;
    for (std::size_t r : kept) {
        auto it = red.rows[r].find(b.cols);
        rhs.push_back(it == red.rows[r].end() ? mpz_class(0) : it->second);
    }
    if (rest.empty()) return true;
    const std::size_t rows = rest.size();
    const std::size_t cols = column_count(rest);
    DenseMatrix u = identity(rows);
    DenseMatrix v = identity(cols);
    const std::vector<mpz_class> diag = dense_snf(rest, &u, cols ? &v : nullptr);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class y = 0;
        for (std::size_t k = 0; k < rows; ++k) y += u[i][k] * rhs[k];
        const mpz_class di = i < diag.size() ? diag[i] : mpz_class(0);
        if (di == 0 ? y != 0 : y % di != 0) return false;
    }
    return true;
}

std::size_t Complex::class_rank(const std::vector<IntChain>& cycles, Filter f) const {
    int d = -1;
    for (const auto& c : cycles) {
        if (c.empty()) continue;
        if (d >= 0 && c.degree() != d) throw std::invalid_argument("class_rank needs cycles of one degree");
        d = c.degree();
    }
    if (d < 0) return 0;
    for (const auto& c : cycles)
        if (!is_cycle(c, f)) throw std::invalid_argument("class_rank needs cycles");
    SparseIntMatrix b = d < max_degree() ? boundary_matrix(d + 1, f) : SparseIntMatrix{basis(d, f).size(), 0, {}};
    const std::size_t base = matrix_rank(b);
    std::vector<MatrixEntry> entries = b.entries;
    for (std::size_t k = 0; k < cycles.size(); ++k) {
        const auto vec = to_vector(cycles[k], d, f);
        for (std::size_t r = 0; r < vec.size(); ++r)
            if (vec[r] != 0) entries.push_back(MatrixEntry{r, b.cols + k, vec[r]});
    }
    const SparseIntMatrix bc = SparseIntMatrix::from_triplets(b.rows, b.cols + cycles.size(), std::move(entries));
    return matrix_rank(bc) - base;
}

}  // namespace qah
