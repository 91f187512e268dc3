#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qah/combinatorics.hpp"

namespace qah {

// Relative class in the basis {E_I}.
struct RelClass {
    int n = 0;
    std::map<Mask, long> coeffs;

    long coeff(Mask I) const;
    bool operator==(const RelClass&) const = default;
};

struct SphereKey {
    std::string pinch;
    Mask I = 0;
    int orient = 1;

    auto operator<=>(const SphereKey&) const = default;
};

// Borel-Moore class: base * (i R)^{n+1} + sum of vanishing spheres.
struct BMClass {
    int n = 0;
    long base = 0;
    std::map<SphereKey, long> spheres;

    long sphere_coeff(const std::string& pinch) const;
    bool operator==(const BMClass&) const = default;
};

struct Pinch {
    std::string name;
    Mask I = 0;
    RelClass cell;
    int sphere_orient = 1;
    int m = 0;
    SphereKey sphere() const { return SphereKey{name, I, sphere_orient}; }
};

// Pairing of (i R)^{n+1} with E_I as stated for the two-sphere bubble: 1 for a single
// sphere, 0 otherwise.
long stated_base_index(Mask I);

long pairing(const BMClass& b, const RelClass& r);
BMClass loop_action(const BMClass& g, const Pinch& p);
// Orientation of the vanishing sphere is solved so that its self-pairing with the cell
// equals the vanishing pairing closed form.
Pinch make_pinch(std::string name, Mask I, RelClass cell);

enum class MinusVariant { A, B };

// p_+ with cell E_1 - E_12; p_- with -E_12 (A) or -(E_1 - E_2 + E_12) (B).
std::pair<Pinch, Pinch> bubble_pinches(int D, MinusVariant v);
BMClass imaginary_cycle(int D);
BMClass run_loops(int D, const std::vector<char>& loops, MinusVariant v);

// The stated case table of the bubble for a word of one or two loops, written out with
// s = (-1)^{(D+1)(D+2)/2} and t = (-1)^{D(D+1)/2}.
BMClass expected_table(int D, const std::vector<char>& loops, MinusVariant v);

double kallen(double a, double b, double c);
double discontinuity_value(int D, double p2, double m1, double m2);

}  // namespace qah
