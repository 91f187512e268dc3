#include "qah/monodromy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qah/intersection.hpp"

namespace qah {

namespace {

int parity(long long e) { return (e % 2 == 0) ? 1 : -1; }

constexpr Mask kE1 = 0b01;
constexpr Mask kE2 = 0b10;
constexpr Mask kE12 = 0b11;

int bubble_s(int D) { return parity(static_cast<long long>(D + 1) * (D + 2) / 2); }
int bubble_t(int D) { return parity(static_cast<long long>(D) * (D + 1) / 2); }

void check_dims(int a, int b) {
    if (a != b) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

long RelClass::coeff(Mask I) const {
    auto it = coeffs.find(I);
    return it == coeffs.end() ? 0 : it->second;
}

long BMClass::sphere_coeff(const std::string& pinch) const {
    long s = 0;
    for (const auto& [k, v] : spheres)
        if (k.pinch == pinch) s += v;
    return s;
}

long stated_base_index(Mask I) { return popcount(I) == 1 ? 1 : 0; }

long pairing(const BMClass& b, const RelClass& r) {
    check_dims(b.n, r.n);
    long total = 0;
    for (const auto& [I, c] : r.coeffs) {
        total += b.base * c * stated_base_index(I);
        for (const auto& [key, v] : b.spheres)
            total += v * key.orient * c * vanishing_pair_index(key.I, I, b.n).value;
    }
    return total;
}

BMClass loop_action(const BMClass& g, const Pinch& p) {
    check_dims(g.n, p.cell.n);
    BMClass out = g;
    const long x = pl_sign(g.n, p.m) * pairing(g, p.cell);
    if (x != 0) {
        long& slot = out.spheres[p.sphere()];
        slot += x;
        if (slot == 0) out.spheres.erase(p.sphere());
    }
    return out;
}

Pinch make_pinch(std::string name, Mask I, RelClass cell) {
    Pinch p;
    p.name = std::move(name);
    p.I = I;
    p.m = popcount(I);
    p.cell = std::move(cell);
    const int self = vanishing_pair_index(I, I, p.cell.n).value;
    const long c = p.cell.coeff(I);
    if (self != 0) {
        if (c == 0) throw std::invalid_argument("vanishing cell must contain E_I");
        p.sphere_orient = c > 0 ? 1 : -1;
    } else {
        // Self pairing vanishes identically; keep the same rule for a stable choice.
        p.sphere_orient = c < 0 ? -1 : 1;
    }
    BMClass probe;
    probe.n = p.cell.n;
    probe.spheres[p.sphere()] = 1;
    if (pairing(probe, p.cell) != vanishing_closed_form(I, I, p.cell.n) * std::abs(c))
        throw std::logic_error("vanishing sphere orientation inconsistent with its cell");
    return p;
}

std::pair<Pinch, Pinch> bubble_pinches(int D, MinusVariant v) {
    if (D < 2) throw std::invalid_argument("bubble needs D >= 2");
    const int n = D - 1;
    RelClass plus{n, {{kE1, 1}, {kE12, -1}}};
    RelClass minus = v == MinusVariant::A ? RelClass{n, {{kE12, -1}}} : RelClass{n, {{kE1, -1}, {kE2, 1}, {kE12, -1}}};
    return {make_pinch("+", kE12, std::move(plus)), make_pinch("-", kE12, std::move(minus))};
}

BMClass imaginary_cycle(int D) {
    if (D < 2) throw std::invalid_argument("bubble needs D >= 2");
    BMClass g;
    g.n = D - 1;
    g.base = 1;
    return g;
}

BMClass run_loops(int D, const std::vector<char>& loops, MinusVariant v) {
    const auto [plus, minus] = bubble_pinches(D, v);
    BMClass g = imaginary_cycle(D);
    for (char c : loops) {
        if (c == '+')
            g = loop_action(g, plus);
        else if (c == '-')
            g = loop_action(g, minus);
        else
            throw std::invalid_argument(std::string("unknown loop '") + c + "'");
    }
    return g;
}

BMClass expected_table(int D, const std::vector<char>& loops, MinusVariant v) {
    const auto [plus, minus] = bubble_pinches(D, v);
    const int s = bubble_s(D);
    const int t = bubble_t(D);
    const bool even = D % 2 == 0;
    BMClass g = imaginary_cycle(D);
    auto put = [&](const Pinch& p, long c) { g.spheres[p.sphere()] = c; };
    const std::string word(loops.begin(), loops.end());
    if (word.empty()) return g;
    if (word == "+") {
        put(plus, s);
    } else if (word == "-") {
    } else if (word == "++") {
        if (!even) put(plus, 4L * s);
    } else if (word == "+-") {
        put(plus, s);
        if (even) put(minus, 2L * t);
    } else {
        throw std::invalid_argument("no stated table for loop word " + word);
    }
    return g;
}

double kallen(double a, double b, double c) { return a * a + b * b + c * c - 2 * a * b - 2 * b * c - 2 * c * a; }

double discontinuity_value(int D, double p2, double m1, double m2) {
    if (D < 2) throw std::invalid_argument("bubble needs D >= 2");
    const double q = -p2;
    if (!(q > (m1 + m2) * (m1 + m2))) throw std::domain_error("kinematics below threshold");
    const double lam = kallen(q, m1 * m1, m2 * m2);
    const double pi = std::numbers::pi;
    return bubble_s(D) * std::pow(pi, (D + 3) / 2.0) / (std::pow(2.0, D - 4) * std::tgamma((D - 1) / 2.0)) *
           std::pow(lam, (D - 3) / 2.0) / std::pow(q, (D - 2) / 2.0);
}

}  // namespace qah
