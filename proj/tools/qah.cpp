// Command-line front end for the sphere-arrangement complex.
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "qah/cells.hpp"
#include "qah/homology.hpp"
#include "qah/intersection.hpp"
#include "qah/monodromy.hpp"
#include "qah/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qah;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int max_n() {
    if (const char* env = std::getenv("QAH_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError("QAH_MAX_N is not an integer");
        }
    }
    return 4;
}

void check_n(int n) {
    const int cap = max_n();
    if (n < 0 || n > cap) throw UsageError("n must lie in 0.." + std::to_string(cap));
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return out.str();
}

json labels_json(Mask m) { return json(labels_of(m)); }

json matrix_json(const SparseIntMatrix& m) {
    json entries = json::array();
    for (const auto& e : m.entries) entries.push_back({e.row, e.col, e.value.get_si()});
    return {{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

std::string complex_json(const Complex& cx) {
    json cells = json::array();
    for (const Cell& c : cx.all_cells()) {
        json flag = json::array();
        for (Mask s : c.index.flag) flag.push_back(labels_json(s));
        cells.push_back({{"flag", flag},
                         {"j_le", labels_json(c.index.j_le)},
                         {"j_ge", labels_json(c.index.j_ge)},
                         {"rel", c.index.rel == Rel::LE ? "le" : "eq"},
                         {"tau", c.tau},
                         {"degree", is_void(c) ? -1 : cell_degree(c)}});
    }
    json bounds = json::array();
    for (int d = 1; d <= cx.max_degree(); ++d)
        bounds.push_back({{"degree", d}, {"matrix", matrix_json(cx.boundary_matrix(d, Filter::ALL))}});
    json doc = {{"format", 1}, {"n", cx.n()}, {"cells", cells}, {"boundaries", bounds}};
    return doc.dump(1) + "\n";
}

std::string sparse_text(const SparseIntMatrix& m) {
    std::ostringstream out;
    out << m.rows << ' ' << m.cols << ' ' << m.entries.size() << '\n';
    for (const auto& e : m.entries) out << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value.get_str() << '\n';
    return out.str();
}

Mask parse_set(const std::string& s, int n) {
    Mask m = 0;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int l = 0;
        try {
            std::size_t used = 0;
            l = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad label '" + tok + "'");
        }
        if (l < 1 || l > n + 1) throw UsageError("label " + tok + " outside 1.." + std::to_string(n + 1));
        m |= bit(l);
    }
    if (m == 0) throw UsageError("empty set");
    return m;
}

Filter parse_filter(const std::string& s) {
    if (s == "eq") return Filter::EQ_ONLY;
    if (s == "relative") return Filter::RELATIVE;
    if (s == "all") return Filter::ALL;
    throw UsageError("filter must be eq, relative or all");
}

std::string torsion_string(const std::vector<mpz_class>& t) {
    std::string s;
    for (const auto& x : t) s += (s.empty() ? "" : ",") + x.get_str();
    return s.empty() ? "none" : s;
}

json bm_json(const BMClass& g) {
    json spheres = json::array();
    for (const auto& [k, v] : g.spheres)
        spheres.push_back({{"pinch", k.pinch}, {"I", labels_json(k.I)}, {"orient", k.orient}, {"coeff", v}});
    return {{"base", g.base}, {"spheres", spheres}};
}

std::string bm_string(const BMClass& g) {
    std::string s = std::to_string(g.base) + "*(iR)^" + std::to_string(g.n + 1);
    for (const auto& [k, v] : g.spheres) s += (v < 0 ? " - " : " + ") + std::to_string(std::labs(v)) + "*e~" + k.pinch;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cell complexes, homology and intersection indices for unit complex sphere arrangements"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    int n = 1;
    std::string out_path;
    auto* build = app.add_subcommand("build", "enumerate the complex and print its manifest");
    build->add_option("--n", n, "dimension")->required();
    build->add_option("--out", out_path, "write the complex JSON here");
    build->add_flag("--json", as_json);

    std::string suite = "all";
    SuiteOptions opts;
    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--n", opts.n, "dimension");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"boundary", "signs", "cube", "generators", "geometry", "intersection", "all"}));
    verify->add_option("--seed", opts.seed, "sampling seed");
    verify->add_option("--samples", opts.samples, "geometry samples per cell");
    verify->add_flag("--json", as_json);

    int degree = 0;
    std::string filter = "all";
    bool show_matrix = false;
    auto* homology = app.add_subcommand("homology", "homology of the complex, the = subcomplex or the pair");
    homology->add_option("--n", n)->required();
    homology->add_option("--degree", degree)->required();
    homology->add_option("--filter", filter, "eq, relative or all");
    homology->add_flag("--matrix", show_matrix, "also print the boundary matrix in sparse text form");
    homology->add_flag("--json", as_json);

    std::string set;
    auto* intersect = app.add_subcommand("intersect", "index of (iR)^{n+1} with the relative generator E_I");
    intersect->add_option("--n", n)->required();
    intersect->add_option("--set", set, "comma separated labels")->required();
    intersect->add_flag("--json", as_json);

    int D = 4;
    std::string loops, variant = "A";
    auto* mono = app.add_subcommand("monodromy", "loop action for the bubble example");
    mono->add_option("--D", D)->required();
    mono->add_option("--loops", loops, "comma separated word over + and -");
    mono->add_option("--variant", variant)->check(CLI::IsMember({"A", "B"}));
    mono->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*build) {
            check_n(n);
            const Complex cx(n);
            const std::string text = complex_json(cx);
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::binary);
                f << text;
                if (!f) {
                    std::cerr << "cannot write " << out_path << "\n";
                    return kIo;
                }
            }
            std::size_t voids = 0;
            for (const Cell& c : cx.all_cells()) voids += is_void(c) ? 1 : 0;
            json per = json::array();
            for (int d = 0; d <= cx.max_degree(); ++d) per.push_back(cx.basis(d, Filter::ALL).size());
            const std::string hash = sha256_hex(text);
            if (as_json) {
                std::cout << json{{"format", 1}, {"n", n}, {"cells", cx.all_cells().size()}, {"void", voids},
                                  {"per_degree", per}, {"hash", hash}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "n " << n << "\ncells " << cx.all_cells().size() << "\nvoid " << voids << "\n";
                for (int d = 0; d <= cx.max_degree(); ++d) std::cout << "degree " << d << " " << per[d] << "\n";
                std::cout << "hash " << hash << "\n";
            }
            return kOk;
        }
        if (*verify) {
            check_n(opts.n);
            const Report r = run_suite(suite, opts);
            if (as_json) {
                json checks = json::array();
                for (const auto& c : r)
                    checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
                std::cout << json{{"n", opts.n}, {"seed", opts.seed}, {"checks", checks}}.dump(1) << "\n";
            } else {
                std::cout << "n " << opts.n << " seed " << opts.seed << "\n" << format_report(r);
            }
            return all_passed(r) ? kOk : kFailed;
        }
        if (*homology) {
            check_n(n);
            const Filter f = parse_filter(filter);
            const Complex cx(n);
            if (degree < 0 || degree > cx.max_degree()) throw UsageError("degree outside 0.." + std::to_string(cx.max_degree()));
            const HomologyGroup h = cx.homology_group(degree, f);
            if (as_json) {
                json tor = json::array();
                for (const auto& t : h.torsion) tor.push_back(t.get_str());
                json doc = {{"n", n}, {"degree", degree}, {"filter", filter}, {"free_rank", h.free_rank}, {"torsion", tor}};
                if (show_matrix) doc["matrix"] = matrix_json(cx.boundary_matrix(degree, f));
                std::cout << doc.dump() << "\n";
            } else {
                std::cout << "free_rank " << h.free_rank << "\ntorsion " << torsion_string(h.torsion) << "\n";
                if (show_matrix) std::cout << sparse_text(cx.boundary_matrix(degree, f));
            }
            return kOk;
        }
        if (*intersect) {
            check_n(n);
            if (n < 1) throw UsageError("intersect needs n >= 1");
            const IndexCertificate c = index_with_imaginary(parse_set(set, n), n);
            if (as_json) {
                json w = json::array();
                for (const auto& x : c.witnesses) w.push_back({{"cell", to_string(x.cell)}, {"label", x.label}});
                json u = json::array();
                for (const auto& x : c.unwitnessed) u.push_back(to_string(x));
                std::cout << json{{"n", n},          {"I", labels_json(c.I)},     {"index", c.value},
                                  {"method", c.method}, {"certified", c.certified}, {"cell_coeff", c.cell_coeff},
                                  {"det", c.det},     {"transverse", c.transverse}, {"witnesses", w},
                                  {"unwitnessed", u}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "index " << c.value << "\nmethod " << c.method << "\ncertified " << (c.certified ? "yes" : "no") << "\n";
                if (c.method == "orientation")
                    std::cout << "cell_coeff " << c.cell_coeff << "\ncell_sign " << c.cell_sign << "\ndet " << c.det << "\n";
                for (const auto& x : c.witnesses) std::cout << "witness " << x.label << " " << to_string(x.cell) << "\n";
                for (const auto& x : c.unwitnessed) std::cout << "no_witness " << to_string(x) << "\n";
                std::cout << "transverse " << c.transverse << "\n";
            }
            return kOk;
        }
        if (*mono) {
            if (D < 2) throw UsageError("D must be at least 2");
            std::vector<char> word;
            std::stringstream ss(loops);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok != "+" && tok != "-") throw UsageError("loops are + or -");
                word.push_back(tok[0]);
            }
            const MinusVariant v = variant == "A" ? MinusVariant::A : MinusVariant::B;
            const BMClass g = run_loops(D, word, v);
            json stated = nullptr;
            std::string stated_text = "none";
            if (word.size() <= 2) {
                try {
                    const BMClass e = expected_table(D, word, v);
                    stated = bm_json(e);
                    stated_text = bm_string(e) + (e == g ? " (agrees)" : " (differs)");
                } catch (const std::invalid_argument&) {
                }
            }
            if (as_json)
                std::cout << json{{"D", D}, {"loops", loops}, {"variant", variant}, {"class", bm_json(g)}, {"stated", stated}}.dump()
                          << "\n";
            else
                std::cout << "result " << bm_string(g) << "\nstated " << stated_text << "\n";
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
