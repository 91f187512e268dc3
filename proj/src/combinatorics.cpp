#include "qah/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qah {

namespace {

bool flag_less(const Flag& a, const Flag& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

bool operator<(const CellIndex& a, const CellIndex& b) {
    if (a.flag != b.flag) return flag_less(a.flag, b.flag);
    if (a.j_le != b.j_le) return a.j_le < b.j_le;
    if (a.j_ge != b.j_ge) return a.j_ge < b.j_ge;
    return a.rel < b.rel;
}

int popcount(Mask m) { return std::popcount(m); }

Mask full_mask(int n) {
    if (n < 0 || n > 30) throw std::invalid_argument("dimension out of range: " + std::to_string(n));
    return (Mask{1} << (n + 1)) - 1;
}

Mask bit(int label) { return Mask{1} << (label - 1); }

bool has(Mask m, int label) { return (m >> (label - 1)) & 1U; }

std::vector<int> labels_of(Mask m) {
    std::vector<int> out;
    for (int l = 1; m != 0; ++l, m >>= 1)
        if (m & 1U) out.push_back(l);
    return out;
}

Mask mask_of(const std::vector<int>& labels) {
    Mask m = 0;
    for (int l : labels) {
        if (l < 1 || l > 31) throw std::invalid_argument("label out of range: " + std::to_string(l));
        m |= bit(l);
    }
    return m;
}

int min_label(Mask m) {
    if (m == 0) throw std::invalid_argument("empty set has no minimum");
    return std::countr_zero(m) + 1;
}

bool valid_flag(const Flag& f, int n) {
    if (f.empty()) return false;
    const Mask full = full_mask(n);
    for (std::size_t l = 0; l < f.size(); ++l) {
        if (f[l] == 0 || (f[l] & ~full) != 0) return false;
        if (l > 0 && ((f[l - 1] & ~f[l]) != 0 || f[l - 1] == f[l])) return false;
    }
    return true;
}

bool valid_index(const CellIndex& i, int n) {
    if (!valid_flag(i.flag, n)) return false;
    const Mask outside = full_mask(n) & ~i.top();
    return (i.j_le & ~outside) == 0 && (i.j_ge & ~outside) == 0 && (i.j_le & i.j_ge) == 0;
}

std::vector<Flag> enumerate_flags(int n) {
    const Mask full = full_mask(n);
    std::vector<Flag> out;
    Flag cur;
    auto grow = [&](auto&& self) -> void {
        out.push_back(cur);
        for (Mask s = cur.back() + 1; s <= full; ++s) {
            if ((cur.back() & ~s) != 0) continue;
            cur.push_back(s);
            self(self);
            cur.pop_back();
        }
    };
    for (Mask s = 1; s <= full; ++s) {
        cur.assign(1, s);
        grow(grow);
    }
    std::sort(out.begin(), out.end(), flag_less);
    return out;
}

std::vector<CellIndex> enumerate_indices(int n) {
    const Mask full = full_mask(n);
    std::vector<CellIndex> out;
    for (const Flag& f : enumerate_flags(n)) {
        const Mask outside = full & ~f.back();
        // Assign each outside label to le, ge or neither. Iterating j_le then j_ge as
        // submasks in increasing order keeps the canonical order.
        std::vector<Mask> subs;
        for (Mask s = 0;; s = (s - outside) & outside) {
            subs.push_back(s);
            if (s == outside) break;
        }
        std::sort(subs.begin(), subs.end());
        for (Mask le : subs)
            for (Mask ge : subs) {
                if (le & ge) continue;
                for (Rel r : {Rel::LE, Rel::EQ}) out.push_back(CellIndex{f, le, ge, r});
            }
    }
    return out;
}

std::vector<GroupIndex> enumerate_group(Mask k1, Mask k2, Rel rel, int n) {
    const Mask full = full_mask(n);
    if ((k1 & ~full) || (k2 & ~full)) throw std::invalid_argument("subset exceeds label range");
    std::vector<GroupIndex> out;
    if (k1 == 0 || k2 == 0 || (k1 & ~k2) != 0) return out;
    Flag cur{k1};
    auto grow = [&](auto&& self) -> void {
        out.push_back(GroupIndex{k1, k2, rel, cur});
        const Mask rest = k2 & ~cur.back();
        for (int j : labels_of(rest)) {
            cur.push_back(cur.back() | bit(j));
            self(self);
            cur.pop_back();
        }
    };
    grow(grow);
    std::sort(out.begin(), out.end(),
              [](const GroupIndex& a, const GroupIndex& b) { return flag_less(a.flag, b.flag); });
    return out;
}

CellIndex group_cell(const GroupIndex& g, int n) {
    const Mask full = full_mask(n);
    return CellIndex{g.flag, full & ~g.k2, full & ~g.flag.back(), g.rel};
}

int position_in_complement(const CellIndex& i, int j) {
    const Mask J = i.j();
    if (j < 1 || j > 31 || !has(J, j)) throw std::invalid_argument("label not in J_i: " + std::to_string(j));
    return popcount(J & (bit(j) - 1)) + 1;
}

int count_smaller(Mask k1, int j) {
    if (j < 1 || j > 31 || has(k1, j)) throw std::invalid_argument("label lies in K1: " + std::to_string(j));
    const Mask below = bit(j) - 1;
    return popcount(below & ~k1);
}

int permutation_parity(const std::vector<int>& images) {
    long long inv = 0;
    for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b)
            if (images[a] > images[b]) ++inv;
    return parity_sign(inv);
}

SignedPermutation make_permutation(std::vector<int> images) {
    std::vector<int> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t a = 0; a < sorted.size(); ++a)
        if (sorted[a] != static_cast<int>(a) + 1) throw std::invalid_argument("not a permutation");
    const int p = permutation_parity(images);
    return SignedPermutation{std::move(images), p};
}

SignedPermutation printed_group_permutation(const GroupIndex& g, int n) {
    const Mask full = full_mask(n);
    const Mask added = g.flag.back() & ~g.k1;
    std::vector<int> images = labels_of(full & ~added);
    for (std::size_t l = 1; l < g.flag.size(); ++l) images.push_back(min_label(g.flag[l] & ~g.flag[l - 1]));
    return make_permutation(std::move(images));
}

int printed_group_sign(const GroupIndex& g, int n) {
    const int k = static_cast<int>(g.flag.size());
    const int jsize = popcount(full_mask(n) & ~g.flag.back());
    long long e = static_cast<long long>(k - 1) * popcount(g.k1);
    if (g.rel == Rel::LE) e += jsize + 1;
    return parity_sign(e) * printed_group_permutation(g, n).parity;
}

SignedPermutation group_permutation(const GroupIndex& g, int n) {
    const Mask full = full_mask(n);
    std::vector<int> images = labels_of(full & ~g.flag.back());
    for (std::size_t l = 1; l < g.flag.size(); ++l) images.push_back(min_label(g.flag[l] & ~g.flag[l - 1]));
    const int p = permutation_parity(images);
    return SignedPermutation{std::move(images), p};
}

int group_sign(const GroupIndex& g, int n) {
    const int jsize = popcount(full_mask(n) & ~g.flag.back());
    long long e = popcount(g.k1);
    if (g.rel == Rel::LE) e += jsize + 1;
    return parity_sign(e) * group_permutation(g, n).parity;
}

int tau_sign(const std::vector<int>& I, int j, int k) {
    const int m = static_cast<int>(I.size());
    if (m == 0 || j < 0 || j > m - 1) throw std::invalid_argument("tau level out of range");
    if (k < m - j || k > m) throw std::invalid_argument("tau index out of range");
    long long e = I[k - 1];
    for (int l = m - j; l <= m; ++l) e += I[l - 1];
    e += -static_cast<long long>(j) * m + static_cast<long long>(j) * (j + 1) / 2;
    return parity_sign(e);
}

}  // namespace qah
