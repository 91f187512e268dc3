#pragma once

#include <cstdint>
#include <vector>

namespace qah {

// Bit l-1 stands for sphere label l; labels run over 1..n+1.
using Mask = std::uint32_t;

enum class Rel : std::uint8_t { LE = 0, EQ = 1 };

using Flag = std::vector<Mask>;

struct CellIndex {
    Flag flag;
    Mask j_le = 0;
    Mask j_ge = 0;
    Rel rel = Rel::LE;

    Mask top() const { return flag.back(); }
    Mask j() const { return j_le | j_ge; }
    bool operator==(const CellIndex&) const = default;
};

// Canonical order: flag length, flag masks, j_le, j_ge, rel.
bool operator<(const CellIndex& a, const CellIndex& b);

struct GroupIndex {
    Mask k1 = 0;
    Mask k2 = 0;
    Rel rel = Rel::LE;
    Flag flag;
};

// images is an arrangement of a label set; parity is taken relative to increasing order.
struct SignedPermutation {
    std::vector<int> images;
    int parity = 1;
};

int popcount(Mask m);
Mask full_mask(int n);
Mask bit(int label);
bool has(Mask m, int label);
std::vector<int> labels_of(Mask m);
Mask mask_of(const std::vector<int>& labels);
int min_label(Mask m);
// Strictly increasing chain of nonempty sets inside {1..n+1}.
bool valid_flag(const Flag& f, int n);
bool valid_index(const CellIndex& i, int n);

std::vector<Flag> enumerate_flags(int n);
// Every base index (both rel values) in canonical order, without tau.
std::vector<CellIndex> enumerate_indices(int n);

std::vector<GroupIndex> enumerate_group(Mask k1, Mask k2, Rel rel, int n);
// The cell index of a group element: J_le = complement of K2, J_ge = complement of the top set.
// These overlap, so the result lives in the extended index set.
CellIndex group_cell(const GroupIndex& g, int n);

int position_in_complement(const CellIndex& i, int j);
int count_smaller(Mask k1, int j);

SignedPermutation make_permutation(std::vector<int> images);
int permutation_parity(const std::vector<int>& images);

// sigma_i lists the labels outside K1: first those outside the top set in increasing
// order, then the labels added along the flag in the order they were added.
SignedPermutation group_permutation(const GroupIndex& g, int n);
int group_sign(const GroupIndex& g, int n);

// The permutation and sign exactly as printed, with K1 kept inside the first block.
// They violate two of the sign identities; group_sign is used everywhere else.
SignedPermutation printed_group_permutation(const GroupIndex& g, int n);
int printed_group_sign(const GroupIndex& g, int n);

// tau_k^{m,j} for sorted labels I (m = I.size()), k 1-based.
int tau_sign(const std::vector<int>& I, int j, int k);

}  // namespace qah
