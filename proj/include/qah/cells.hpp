#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qah/combinatorics.hpp"

namespace qah {

struct Cell {
    CellIndex index;
    int tau = 0;

    bool operator==(const Cell&) const = default;
};

bool operator<(const Cell& a, const Cell& b);

using Coeff = std::int64_t;

class IntChain {
public:
    IntChain() = default;
    explicit IntChain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Cell, Coeff>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Coeff coeff(const Cell& c) const;

    // Throws when the cell's degree differs from the chain's.
    void add(const Cell& c, Coeff v);
    IntChain& operator+=(const IntChain& o);
    IntChain& operator-=(const IntChain& o);
    IntChain& operator*=(Coeff s);

    friend IntChain operator+(IntChain a, const IntChain& b) { return a += b; }
    friend IntChain operator-(IntChain a, const IntChain& b) { return a -= b; }
    friend IntChain operator*(Coeff s, IntChain a) { return a *= s; }
    friend IntChain operator-(IntChain a) { return a *= -1; }
    // Equality ignores the degree of empty chains.
    friend bool operator==(const IntChain& a, const IntChain& b) {
        return a.terms_ == b.terms_ && (a.terms_.empty() || a.degree_ == b.degree_);
    }

private:
    int degree_ = 0;
    std::map<Cell, Coeff> terms_;
};

std::string mask_string(Mask m);
std::string to_string(const Cell& c);

int cell_degree(const Cell& c);
// An "=" cell with |J| + |tau| = 0 is the empty set; it carries no chain generator.
bool is_void(const Cell& c);
std::vector<Cell> enumerate_cells(int n);

IntChain boundary_cell(const Cell& c);
IntChain boundary(const IntChain& c);

// Grouped cell e^{+1} - e^{-1}, expanded over partitions of the overlap of j_le and j_ge.
IntChain grouped_cell(const Flag& flag, Mask j_le, Mask j_ge, Rel rel);
IntChain cube_chain(Mask k1, Mask k2, Rel rel, int n);

// e_{I,level} (rel EQ) or its relative counterpart (rel LE); level = m - j in 1..m.
IntChain generator_level(const std::vector<int>& I, int level, Rel rel, int n);
std::pair<IntChain, IntChain> split_uv(const std::vector<int>& I, int level, int n);

struct GeneratorSet {
    int n = 0;
    std::map<Mask, IntChain> e;
    std::map<Mask, IntChain> E;
};

IntChain generator_e(Mask I, int n);
IntChain generator_E(Mask I, int n);
GeneratorSet top_generators(int n);

IntChain part_in_sphere(const IntChain& c, int j);
// Repeated boundary followed by the part in S_{i_t}, t = 1..|I|.
IntChain iterated_boundary(const IntChain& c, Mask I);

}  // namespace qah
