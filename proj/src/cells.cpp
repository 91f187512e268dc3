#include "qah/cells.hpp"

#include <stdexcept>
#include <string>

namespace qah {

namespace {

Coeff sgn(long long e) { return (e % 2 == 0) ? 1 : -1; }

std::vector<int> prefix_with(const std::vector<int>& I, int len, int extra) {
    std::vector<int> out(I.begin(), I.begin() + len);
    out.push_back(extra);
    return out;
}

void check_level(const std::vector<int>& I, int level) {
    const int m = static_cast<int>(I.size());
    if (m == 0) throw std::invalid_argument("generator needs a nonempty set");
    if (level < 1 || level > m) throw std::invalid_argument("generator level out of range: " + std::to_string(level));
    for (int a = 1; a < m; ++a)
        if (I[a - 1] >= I[a]) throw std::invalid_argument("generator labels must be sorted");
}

}  // namespace

bool operator<(const Cell& a, const Cell& b) {
    if (!(a.index == b.index)) return a.index < b.index;
    return a.tau < b.tau;
}

Coeff IntChain::coeff(const Cell& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? 0 : it->second;
}

void IntChain::add(const Cell& c, Coeff v) {
    if (v == 0) return;
    const int d = cell_degree(c);
    if (terms_.empty()) {
        degree_ = d;
    } else if (d != degree_) {
        throw std::invalid_argument("cell of degree " + std::to_string(d) + " added to a chain of degree " +
                                    std::to_string(degree_));
    }
    auto [it, fresh] = terms_.emplace(c, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

IntChain& IntChain::operator+=(const IntChain& o) {
    if (terms_.empty()) degree_ = o.degree_;
    for (const auto& [c, v] : o.terms_) add(c, v);
    return *this;
}

IntChain& IntChain::operator-=(const IntChain& o) {
    if (terms_.empty()) degree_ = o.degree_;
    for (const auto& [c, v] : o.terms_) add(c, -v);
    return *this;
}

IntChain& IntChain::operator*=(Coeff s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
}

std::string mask_string(Mask m) {
    std::string s = "{";
    for (int l : labels_of(m)) s += (s.size() > 1 ? "," : "") + std::to_string(l);
    return s + "}";
}

std::string to_string(const Cell& c) {
    std::string s = "(";
    for (std::size_t l = 0; l < c.index.flag.size(); ++l) s += (l ? "," : "") + mask_string(c.index.flag[l]);
    s += ") le=" + mask_string(c.index.j_le) + " ge=" + mask_string(c.index.j_ge);
    s += c.index.rel == Rel::LE ? " <=" : " =";
    return s + " tau=" + std::to_string(c.tau);
}

int cell_degree(const Cell& c) {
    const int k = static_cast<int>(c.index.flag.size());
    const int d = (k - 1) + popcount(c.index.j()) + (c.tau != 0 ? 1 : 0);
    return c.index.rel == Rel::LE ? d : d - 1;
}

bool is_void(const Cell& c) {
    return c.index.rel == Rel::EQ && c.index.j() == 0 && c.tau == 0;
}

std::vector<Cell> enumerate_cells(int n) {
    std::vector<Cell> out;
    for (const CellIndex& i : enumerate_indices(n))
        for (int t : {-1, 0, 1}) out.push_back(Cell{i, t});
    return out;
}

IntChain boundary_cell(const Cell& c) {
    IntChain out(cell_degree(c) - 1);
    if (is_void(c)) return out;
    const CellIndex& i = c.index;
    const int k = static_cast<int>(i.flag.size());
    const Mask J = i.j();
    const int nj = popcount(J);
    const int t = c.tau != 0 ? 1 : 0;
    const int le = i.rel == Rel::LE ? 1 : 0;
    auto put = [&](const Cell& face, Coeff v) {
        if (!is_void(face)) out.add(face, v);
    };

    if (t == 1) put(Cell{i, 0}, sgn(nj));
    if (le) {
        CellIndex eq = i;
        eq.rel = Rel::EQ;
        put(Cell{eq, c.tau}, sgn(nj + t));
    }
    for (int j : labels_of(J)) {
        CellIndex f = i;
        f.j_le &= ~bit(j);
        f.j_ge &= ~bit(j);
        put(Cell{f, c.tau}, sgn(position_in_complement(i, j) - 1));
    }
    // Removing the only set of a flag would leave no flag; that face is zero.
    if (k >= 2) {
        for (int l = 1; l <= k; ++l) {
            CellIndex f = i;
            f.flag.erase(f.flag.begin() + (l - 1));
            put(Cell{f, c.tau}, sgn(nj + t + le - 1 + l - 1));
        }
    }
    return out;
}

IntChain boundary(const IntChain& c) {
    IntChain out(c.degree() - 1);
    for (const auto& [cell, v] : c.terms()) {
        IntChain b = boundary_cell(cell);
        b *= v;
        out += b;
    }
    return out;
}

IntChain grouped_cell(const Flag& flag, Mask j_le, Mask j_ge, Rel rel) {
    const Mask K = j_le & j_ge;
    IntChain out;
    for (Mask A = 0;; A = (A - K) & K) {
        const Mask B = K & ~A;
        const CellIndex i{flag, (j_le & ~K) | A, (j_ge & ~K) | B, rel};
        const Coeff s = sgn(popcount(A) - 1);
        out.add(Cell{i, 1}, s);
        out.add(Cell{i, -1}, -s);
        if (A == K) break;
    }
    return out;
}

IntChain cube_chain(Mask k1, Mask k2, Rel rel, int n) {
    IntChain out;
    for (const GroupIndex& g : enumerate_group(k1, k2, rel, n)) {
        const CellIndex i = group_cell(g, n);
        IntChain e = grouped_cell(i.flag, i.j_le, i.j_ge, rel);
        e *= group_sign(g, n);
        out += e;
    }
    return out;
}

IntChain generator_level(const std::vector<int>& I, int level, Rel rel, int n) {
    check_level(I, level);
    const int m = static_cast<int>(I.size());
    const int j = m - level;
    const Mask top = mask_of(I);
    IntChain out;
    for (int k = m - j; k <= m; ++k) {
        IntChain c = cube_chain(mask_of(prefix_with(I, m - j - 1, I[k - 1])), top, rel, n);
        c *= tau_sign(I, j, k);
        out += c;
    }
    return out;
}

std::pair<IntChain, IntChain> split_uv(const std::vector<int>& I, int level, int n) {
    check_level(I, level);
    const int m = static_cast<int>(I.size());
    const int j = m - level;
    if (j < 1) throw std::invalid_argument("the top level has no splitting");
    IntChain u = cube_chain(mask_of(std::vector<int>(I.begin(), I.begin() + (m - j))), mask_of(I), Rel::EQ, n);
    u *= tau_sign(I, j, m - j);
    IntChain v = generator_level(I, level, Rel::EQ, n) - u;
    return {u, v};
}

IntChain generator_e(Mask I, int n) {
    IntChain c = generator_level(labels_of(I), 1, Rel::EQ, n);
    c *= sgn(min_label(I) - 1);
    return c;
}

IntChain generator_E(Mask I, int n) {
    IntChain c = generator_level(labels_of(I), 1, Rel::LE, n);
    c *= sgn(min_label(I) - 1);
    return c;
}

GeneratorSet top_generators(int n) {
    if (n < 1) throw std::invalid_argument("generators need n >= 1");
    GeneratorSet g;
    g.n = n;
    for (Mask I = 1; I <= full_mask(n); ++I) {
        g.e.emplace(I, generator_e(I, n));
        g.E.emplace(I, generator_E(I, n));
    }
    return g;
}

IntChain part_in_sphere(const IntChain& c, int j) {
    IntChain out(c.degree());
    for (const auto& [cell, v] : c.terms())
        if (has(cell.index.flag.front(), j)) out.add(cell, v);
    return out;
}

IntChain iterated_boundary(const IntChain& c, Mask I) {
    IntChain cur = c;
    for (int j : labels_of(I)) cur = part_in_sphere(boundary(cur), j);
    return cur;
}

}  // namespace qah
