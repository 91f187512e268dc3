// One line per acceptance criterion. Exit status is 0 when every criterion passes except
// the pinned documented deviations, and those still fail in the way recorded in README.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "qah/cells.hpp"
#include "qah/geometry.hpp"
#include "qah/homology.hpp"
#include "qah/intersection.hpp"
#include "qah/monodromy.hpp"
#include "qah/verify.hpp"

using namespace qah;

namespace {

// Tolerances and sampling sizes, pinned.
constexpr double kGeomTol = 1e-9;       // checked inside the geometry suite (geo::kTol)
constexpr double kSingularMin = 1e-6;   // general-position threshold
constexpr int kGeomSamples = 1000;      // per cell / per sign pattern
constexpr int kGeneralPositionSamples = 100;
constexpr std::uint64_t kSeed = 20240601;

// Criteria whose stated form does not hold; see README "Deviations".
const std::set<int> kDocumentedDeviations{4, 6, 8};

struct Outcome {
    bool passed = true;
    std::string detail;
    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0e", x);
    return buf;
}

const CheckResult* find(const Report& r, const std::string& name) {
    for (const auto& c : r)
        if (c.name == name) return &c;
    return nullptr;
}

void require(Outcome& o, const Report& r, const std::string& name, const std::string& where) {
    const CheckResult* c = find(r, name);
    if (c == nullptr)
        o.fail(where + ": missing check " + name);
    else if (!c->passed)
        o.fail(where + ": " + c->suite + "/" + c->name + " " + c->detail);
}

SuiteOptions at(int n) {
    SuiteOptions s;
    s.n = n;
    s.seed = kSeed;
    s.samples = kGeomSamples;
    return s;
}

Outcome chain_axiom() {
    Outcome o;
    long cells = 0;
    for (int n = 0; n <= 4; ++n)
        for (const Cell& c : enumerate_cells(n)) {
            ++cells;
            const IntChain b = boundary_cell(c);
            if (!boundary(b).empty()) o.fail("n=" + std::to_string(n) + " " + to_string(c));
        }
    if (o.passed) o.detail = std::to_string(cells) + " cells, n=0..4";
    return o;
}

Outcome cube() {
    Outcome o;
    long cases = 0;
    for (int n = 0; n <= 3; ++n) {
        const Report r = verify_cube(at(n));
        require(o, r, "cube_lemma", "n=" + std::to_string(n));
        cases += r.front().cases;
    }
    if (o.passed) o.detail = std::to_string(cases) + " (K1,K2,rel) cases, n<=3";
    return o;
}

Outcome signs() {
    Outcome o;
    for (int n = 0; n <= 3; ++n) {
        const Report r = verify_signs(at(n));
        for (const char* name : {"sgn_identity_1", "sgn_identity_2", "sgn_identity_3", "sgn_identity_4", "tau_relation_1",
                                 "tau_relation_2", "tau_relation_3"})
            require(o, r, name, "n=" + std::to_string(n));
    }
    if (o.passed) o.detail = "4 sgn identities n<=3, 3 tau relations m<=6";
    return o;
}

Outcome generators() {
    Outcome o;
    bool signed_ok = true;
    for (int n = 1; n <= 3; ++n) {
        const Report r = verify_generators(at(n));
        const std::string where = "n=" + std::to_string(n);
        for (const char* name : {"de_zero", "dE_equals_e", "mayer_vietoris_split", "iterated_boundary"})
            require(o, r, name, where);
        const CheckResult* s = find(r, "iterated_boundary_signed");
        signed_ok = signed_ok && s != nullptr && s->passed;
    }
    if (o.passed)
        o.detail = "all I, n<=3";
    else
        o.detail += signed_ok ? "; (-1)^{min I - 1} e_{I,I,=} holds for all I" : "; signed form also fails";
    return o;
}

Outcome ranks() {
    Outcome o;
    const std::size_t want[] = {0, 3, 7, 15};
    for (int n = 1; n <= 3; ++n) {
        const Complex cx(n);
        const GeneratorSet g = top_generators(n);
        std::vector<IntChain> es, Es;
        for (const auto& kv : g.e) es.push_back(kv.second);
        for (const auto& kv : g.E) Es.push_back(kv.second);
        const std::size_t re = cx.class_rank(es, Filter::EQ_ONLY);
        const std::size_t rE = cx.class_rank(Es, Filter::RELATIVE);
        if (re != want[n] || rE != want[n])
            o.fail("n=" + std::to_string(n) + ": ranks " + std::to_string(re) + ", " + std::to_string(rE));
    }
    if (o.passed) o.detail = "ranks 3, 7, 15 for e_I and E_I";
    return o;
}

Outcome indices() {
    Outcome o;
    int bad = 0, total = 0;
    for (int n = 0; n + 1 <= 9; ++n)
        for (int k = 1; k <= n + 1; ++k)
            if (basis_change_det(n, k) != ((k - 1) % 2 ? -1 : 1))
                o.fail("basis_change_det(" + std::to_string(n) + "," + std::to_string(k) + ")");
    for (int n = 1; n <= 3; ++n)
        for (Mask I = 1; I <= full_mask(n); ++I) {
            ++total;
            const IndexCertificate c = index_with_imaginary(I, n);
            const int want = popcount(I) == 1 ? 1 : 0;
            if (c.value != want || !c.certified) {
                ++bad;
                std::string why = "n=" + std::to_string(n) + " I=" + mask_string(I) + ": index " +
                                  std::to_string(c.value) + " via " + c.method;
                if (!c.unwitnessed.empty()) why += ", no disjointness witness for " + to_string(c.unwitnessed.front());
                o.fail(why);
            }
        }
    if (o.passed)
        o.detail = std::to_string(total) + " sets, dets n+1<=9";
    else
        o.detail += " (" + std::to_string(bad) + "/" + std::to_string(total) + " sets, all with |I|>=2)";
    return o;
}

Outcome vanishing() {
    Outcome o;
    long cases = 0;
    for (int n = 0; n <= 4; ++n)
        for (Mask I = 1; I <= full_mask(n); ++I)
            for (Mask J = 1; J <= full_mask(n); ++J) {
                ++cases;
                const VanishingPairing p = vanishing_pair_index(I, J, n);
                const long a = n + 1;
                const int closed = (I == J && (n + 1 - popcount(I)) % 2 == 0) ? 2 * ((a * (a + 1) / 2) % 2 ? -1 : 1) : 0;
                if (p.value != closed)
                    o.fail("n=" + std::to_string(n) + " I=" + mask_string(I) + " J=" + mask_string(J) + ": " +
                           std::to_string(p.value) + " vs " + std::to_string(closed));
            }
    if (o.passed) o.detail = std::to_string(cases) + " pairs, n<=4";
    return o;
}

std::string describe(const BMClass& g) {
    std::string s = std::to_string(g.base) + "*iR";
    for (const auto& [k, v] : g.spheres) s += (v < 0 ? " - " : " + ") + std::to_string(std::abs(v)) + "*e~" + k.pinch;
    return s;
}

Outcome bubble() {
    Outcome o;
    int cases = 0, bad = 0;
    const std::vector<std::vector<char>> words{{}, {'+'}, {'-'}, {'+', '+'}, {'+', '-'}};
    for (int D = 2; D <= 5; ++D)
        for (MinusVariant v : {MinusVariant::A, MinusVariant::B})
            for (const auto& w : words) {
                ++cases;
                const BMClass got = run_loops(D, w, v);
                const BMClass want = expected_table(D, w, v);
                if (!(got == want)) ++bad;
                if (!(got == want))
                    o.fail("D=" + std::to_string(D) + " variant " + (v == MinusVariant::A ? "A" : "B") + " loops " +
                           std::string(w.begin(), w.end()) + ": " + describe(got) + ", table " + describe(want));
            }
    if (o.passed)
        o.detail = std::to_string(cases) + " table entries, D=2..5";
    else
        o.detail += " (" + std::to_string(bad) + "/" + std::to_string(cases) + " entries differ)";
    return o;
}

Outcome geometry() {
    Outcome o;
    SuiteOptions s = at(2);
    const Report r = verify_geometry(s);
    for (const char* name : {"corner_round_trip", "param_membership", "imaginary_part_vanishes", "general_position"})
        require(o, r, name, "n=2");
    for (Mask I = 1; I <= full_mask(2); ++I) {
        const auto gp = geo::check_general_position(I, 2, kGeneralPositionSamples, kSeed + 6 + I);
        if (gp.samples < kGeneralPositionSamples || !(gp.min_singular > kSingularMin))
            o.fail("general position I=" + mask_string(I));
    }
    if (o.passed) {
        o.detail = "n=2, " + std::to_string(kGeomSamples) + " samples per cell, tol " + sci(kGeomTol) +
                   ", " + find(r, "general_position")->detail;
    }
    return o;
}

std::string run_command(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    status = pclose(p);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome determinism(const std::string& cli, const std::string& workdir) {
    Outcome o;
    const SuiteOptions s = at(2);
    if (format_report(run_suite("all", s)) != format_report(run_suite("all", s))) o.fail("in-process reports differ");

    int st1 = 0, st2 = 0;
    const std::string verify = cli + " verify --n 2 --suite all --seed " + std::to_string(kSeed);
    const std::string r1 = run_command(verify, st1);
    const std::string r2 = run_command(verify, st2);
    if (r1.empty() || r1 != r2 || st1 != st2) o.fail("verify --suite all output differs between runs");

    for (int n = 0; n <= 2; ++n) {
        const std::string a = workdir + "/acceptance_a_" + std::to_string(n) + ".json";
        const std::string b = workdir + "/acceptance_b_" + std::to_string(n) + ".json";
        int sa = 0, sb = 0;
        const std::string ma = run_command(cli + " build --n " + std::to_string(n) + " --out " + a, sa);
        const std::string mb = run_command(cli + " build --n " + std::to_string(n) + " --out " + b, sb);
        const std::string ja = slurp(a), jb = slurp(b);
        if (sa != 0 || sb != 0 || ja.empty() || ja != jb || ma != mb) o.fail("build --n " + std::to_string(n) + " not byte-stable");
        std::remove(a.c_str());
        std::remove(b.c_str());
    }
    if (o.passed) o.detail = "verify all x2 (" + std::to_string(r1.size()) + " bytes), build n=0..2 x2";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = QAH_CLI_PATH;
    std::string workdir = ".";
    if (argc > 1) cli = argv[1];
    if (argc > 2) workdir = argv[2];

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"chain complex: dd = 0, n<=4", chain_axiom},
        {"cube lemma, n<=3", cube},
        {"sign calculus", signs},
        {"generators", generators},
        {"decomposition ranks", ranks},
        {"intersection indices", indices},
        {"vanishing pairings, n<=4", vanishing},
        {"bubble monodromy tables", bubble},
        {"geometry", geometry},
        {"determinism", [&] { return determinism(cli, workdir); }},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.passed) failed.insert(id);
        std::string tag;
        if (!o.passed && kDocumentedDeviations.count(id)) tag = " (documented deviation)";
        if (o.passed && kDocumentedDeviations.count(id)) tag = " (expected to fail; deviation list is stale)";
        char t[32];
        std::snprintf(t, sizeof t, "%.1fs", secs);
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << id << " " << criteria[i].first << ": " << o.detail
                  << tag << " [" << t << "]" << std::endl;
    }
    const bool as_documented = failed == kDocumentedDeviations;
    std::cout << (as_documented ? "acceptance matches the documented state" : "acceptance differs from the documented state")
              << std::endl;
    return as_documented ? 0 : 1;
}
