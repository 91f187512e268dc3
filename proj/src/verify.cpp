#include "qah/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>

#include "qah/cells.hpp"
#include "qah/geometry.hpp"
#include "qah/homology.hpp"
#include "qah/intersection.hpp"

namespace qah {

namespace {

int parity(long long e) { return (e % 2 == 0) ? 1 : -1; }

class Check {
public:
    Check(std::string suite, std::string name) {
        r_.suite = std::move(suite);
        r_.name = std::move(name);
    }
    void tick(long k = 1) { r_.cases += k; }
    bool expect(bool ok, const std::string& detail) {
        tick();
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.detail = detail;
        }
        return ok;
    }
    CheckResult done(const std::string& summary = "") {
        if (r_.passed) r_.detail = summary.empty() ? std::to_string(r_.cases) + " cases" : summary;
        return r_;
    }

private:
    CheckResult r_;
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

std::string rel_name(Rel r) { return r == Rel::LE ? "<=" : "="; }

// Flag counts by top set, computed by recursion over proper nonempty subsets.
long cell_count_oracle(int n) {
    const Mask full = full_mask(n);
    std::vector<long> f(full + 1, 0);
    long total = 0;
    for (Mask T = 1; T <= full; ++T) {
        f[T] = 1;
        for (Mask S = (T - 1) & T; S != 0; S = (S - 1) & T) f[T] += f[S];
        long pow3 = 1;
        for (int l = 0; l < n + 1 - popcount(T); ++l) pow3 *= 3;
        total += f[T] * pow3 * 6;
    }
    return total;
}

bool product_is_zero(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) return false;
    std::vector<std::vector<std::pair<std::size_t, mpz_class>>> brows(b.rows);
    for (const auto& e : b.entries) brows[e.row].emplace_back(e.col, e.value);
    std::map<std::pair<std::size_t, std::size_t>, mpz_class> acc;
    for (const auto& e : a.entries)
        for (const auto& [c, v] : brows[e.col]) acc[{e.row, c}] += e.value * v;
    for (const auto& kv : acc)
        if (kv.second != 0) return false;
    return true;
}

std::vector<std::pair<Mask, Mask>> nested_pairs(int n) {
    std::vector<std::pair<Mask, Mask>> out;
    const Mask full = full_mask(n);
    for (Mask k2 = 1; k2 <= full; ++k2)
        for (Mask k1 = k2;; k1 = (k1 - 1) & k2) {
            if (k1 == 0) break;
            out.emplace_back(k1, k2);
        }
    return out;
}

Flag replace_at(Flag f, std::size_t pos, Mask m) {
    f[pos] = m;
    return f;
}

Eigen::VectorXd dirichlet(std::mt19937_64& rng, int parts, int keep) {
    std::exponential_distribution<double> ex(1.0);
    Eigen::VectorXd w(parts);
    for (int l = 0; l < parts; ++l) w(l) = ex(rng);
    w /= w.sum();
    return w.head(keep);
}

}  // namespace

Report verify_boundary(const SuiteOptions& o) {
    const int n = o.n;
    Report rep;
    const auto cells = enumerate_cells(n);
    {
        Check c("boundary", "cell_count");
        const long expect = cell_count_oracle(n);
        c.expect(static_cast<long>(cells.size()) == expect,
                 std::to_string(cells.size()) + " cells, oracle " + std::to_string(expect));
        rep.push_back(c.done(std::to_string(cells.size()) + " cells"));
    }
    {
        Check c("boundary", "dd_zero");
        for (const Cell& cell : cells) c.expect(boundary(boundary_cell(cell)).empty(), "dd != 0 on " + to_string(cell));
        rep.push_back(c.done());
    }
    {
        Check c("boundary", "eq_subcomplex");
        for (const Cell& cell : cells) {
            if (cell.index.rel != Rel::EQ) continue;
            bool ok = true;
            const IntChain b = boundary_cell(cell);
            for (const auto& kv : b.terms()) ok = ok && kv.first.index.rel == Rel::EQ;
            c.expect(ok, "boundary of " + to_string(cell) + " leaves the = cells");
        }
        rep.push_back(c.done());
    }
    {
        Check c("boundary", "matrix_composition");
        Check p("boundary", "filter_partition");
        const Complex cx(n);
        for (Filter f : {Filter::EQ_ONLY, Filter::RELATIVE, Filter::ALL})
            for (int d = 1; d < cx.max_degree(); ++d)
                c.expect(product_is_zero(cx.boundary_matrix(d, f), cx.boundary_matrix(d + 1, f)),
                         std::string("filter ") + filter_name(f) + " degree " + std::to_string(d));
        for (int d = 0; d <= cx.max_degree(); ++d)
            p.expect(cx.basis(d, Filter::ALL).size() ==
                         cx.basis(d, Filter::EQ_ONLY).size() + cx.basis(d, Filter::RELATIVE).size(),
                     "degree " + std::to_string(d));
        rep.push_back(c.done());
        rep.push_back(p.done());
    }
    return rep;
}

Report verify_signs(const SuiteOptions& o) {
    const int n = o.n;
    Report rep;
    Check s1("signs", "sgn_identity_1"), s2("signs", "sgn_identity_2"), s3("signs", "sgn_identity_3"),
        s4("signs", "sgn_identity_4");
    for (const auto& [k1, k2] : nested_pairs(n)) {
        for (Rel rel : {Rel::LE, Rel::EQ}) {
            const int le = rel == Rel::LE ? 1 : 0;
            for (const GroupIndex& g : enumerate_group(k1, k2, rel, n)) {
                const int k = static_cast<int>(g.flag.size());
                const Mask top = g.flag.back();
                const int nj = n + 1 - popcount(top);
                const int sg = group_sign(g, n);
                const std::string where = "K1=" + mask_string(k1) + " K2=" + mask_string(k2) + " " + rel_name(rel) +
                                          " flag top " + mask_string(top) + " k=" + std::to_string(k);
                if (rel == Rel::LE) {
                    const GroupIndex eq{k1, k2, Rel::EQ, g.flag};
                    s1.expect(sg == parity(nj + 1) * group_sign(eq, n), where);
                }
                for (int j = 2; j <= k - 1; ++j) {
                    const Mask j2 = g.flag[j] & ~g.flag[j - 1];
                    const GroupIndex h{k1, k2, rel, replace_at(g.flag, j - 1, g.flag[j - 2] | j2)};
                    s2.expect(sg == -group_sign(h, n), where + " swap at " + std::to_string(j));
                }
                for (int j : labels_of(k2 & ~top)) {
                    GroupIndex h{k1, k2, rel, g.flag};
                    h.flag.push_back(top | bit(j));
                    const int pos = position_in_complement(group_cell(g, n), j);
                    s3.expect(group_sign(h, n) == parity(nj - 1 + le + k - pos) * sg,
                              where + " extend by " + std::to_string(j));
                }
                if (k > 1) {
                    const int j = min_label(g.flag[1] & ~g.flag[0]);
                    const GroupIndex h{k1 | bit(j), k2, rel, Flag(g.flag.begin() + 1, g.flag.end())};
                    s4.expect(sg == parity(nj + count_smaller(k1, j) - 1) * group_sign(h, n), where);
                }
            }
        }
    }
    for (Check* c : {&s1, &s2, &s3, &s4}) rep.push_back(c->done());

    Check t1("signs", "tau_relation_1"), t2("signs", "tau_relation_2"), t3("signs", "tau_relation_3");
    for (int m = 1; m <= 6; ++m) {
        for (Mask S = 1; S < (Mask{1} << 8); ++S) {
            if (popcount(S) != m) continue;
            const std::vector<int> I = labels_of(S);
            auto at = [&](int k) { return I[k - 1]; };
            for (int j = 0; j <= m - 1; ++j)
                for (int k = m - j + 1; k <= m; ++k) {
                    const std::string where = "I=" + mask_string(S) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
                    if (j >= 1) {
                        t1.expect(parity(at(k) - m + j) * tau_sign(I, j, m - j) == tau_sign(I, j - 1, k), where);
                        t2.expect(parity(at(m - j) - m + j) * tau_sign(I, j, k) == tau_sign(I, j - 1, k), where);
                    }
                    for (int l = m - j + 1; l <= m; ++l)
                        t3.expect(parity(at(k)) * tau_sign(I, j, l) == parity(at(l)) * tau_sign(I, j, k),
                                  where + " l=" + std::to_string(l));
                }
        }
    }
    for (Check* c : {&t1, &t2, &t3}) rep.push_back(c->done());
    return rep;
}

Report verify_cube(const SuiteOptions& o) {
    const int n = o.n;
    Check c("cube", "cube_lemma");
    for (const auto& [k1, k2] : nested_pairs(n)) {
        for (Rel rel : {Rel::LE, Rel::EQ}) {
            const int le = rel == Rel::LE ? 1 : 0;
            IntChain rhs;
            if (le) rhs += cube_chain(k1, k2, Rel::EQ, n);
            for (int j : labels_of(k2 & ~k1)) {
                IntChain t = cube_chain(k1 | bit(j), k2, rel, n);
                t *= parity(count_smaller(k1, j) + le - 1);
                rhs += t;
            }
            c.expect(boundary(cube_chain(k1, k2, rel, n)) == rhs,
                     "K1=" + mask_string(k1) + " K2=" + mask_string(k2) + " " + rel_name(rel));
        }
    }
    return {c.done()};
}

Report verify_generators(const SuiteOptions& o) {
    const int n = o.n;
    if (n < 1) {
        Check c("generators", "generators");
        return {c.done("no generators for n = 0")};
    }
    const GeneratorSet gens = top_generators(n);
    Check de("generators", "de_zero"), dE("generators", "dE_equals_e"), mv("generators", "mayer_vietoris_split"),
        it("generators", "iterated_boundary"), its("generators", "iterated_boundary_signed");
    for (const auto& [I, e] : gens.e) {
        const IntChain& E = gens.E.at(I);
        const std::string where = "I=" + mask_string(I);
        de.expect(boundary(e).empty(), where);
        dE.expect(boundary(E) == e, where);
        const std::vector<int> L = labels_of(I);
        for (int lv = 1; lv < static_cast<int>(L.size()); ++lv) {
            const auto [u, v] = split_uv(L, lv, n);
            const IntChain next = generator_level(L, lv + 1, Rel::EQ, n);
            mv.expect(boundary(u) == next && boundary(v) == -next, where + " level " + std::to_string(lv));
        }
        const IntChain iter = iterated_boundary(E, I);
        const IntChain local = cube_chain(I, I, Rel::EQ, n);
        it.expect(iter == local, where + ": result is " + (iter == -local ? "-e_{I,I,=}" : "not +-e_{I,I,=}"));
        its.expect(iter == parity(min_label(I) - 1) * local, where);
    }
    Report rep;
    for (Check* c : {&de, &dE, &mv, &it, &its}) rep.push_back(c->done());

    const Complex cx(n);
    std::vector<IntChain> es, Es;
    for (const auto& kv : gens.e) es.push_back(kv.second);
    for (const auto& kv : gens.E) Es.push_back(kv.second);
    const std::size_t want = (std::size_t{1} << (n + 1)) - 1;
    {
        Check c("generators", "class_rank_e");
        const std::size_t r = cx.class_rank(es, Filter::EQ_ONLY);
        c.expect(r == want, "rank " + std::to_string(r) + ", expected " + std::to_string(want));
        rep.push_back(c.done("rank " + std::to_string(r)));
    }
    {
        Check c("generators", "class_rank_E");
        const std::size_t r = cx.class_rank(Es, Filter::RELATIVE);
        c.expect(r == want, "rank " + std::to_string(r) + ", expected " + std::to_string(want));
        rep.push_back(c.done("rank " + std::to_string(r)));
    }
    {
        Check c("generators", "e_not_boundary");
        for (const auto& [I, e] : gens.e) c.expect(!cx.is_boundary(e, Filter::EQ_ONLY), "I=" + mask_string(I));
        rep.push_back(c.done());
    }
    {
        Check c("generators", "E_relative_cycle");
        for (const auto& [I, E] : gens.E) c.expect(cx.is_cycle(E, Filter::RELATIVE), "I=" + mask_string(I));
        rep.push_back(c.done());
    }
    return rep;
}

Report verify_geometry(const SuiteOptions& o) {
    using namespace geo;
    const int n = o.n;
    Report rep;
    {
        Check c("geometry", "corner_round_trip");
        std::mt19937_64 rng(o.seed + 1);
        std::normal_distribution<double> g;
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double worst = 0;
        for (int dim = 1; dim <= 6; ++dim)
            for (unsigned sig = 0; sig < (1u << dim); ++sig) {
                std::vector<int> signs(dim);
                for (int l = 0; l < dim; ++l) signs[l] = (sig >> l) & 1u ? -1 : 1;
                c.expect(corner_map(Vec::Zero(dim), signs).norm() == 0.0, "h(0) != 0");
                for (int s = 0; s < o.samples; ++s) {
                    Vec x(dim);
                    for (int l = 0; l < dim; ++l) x(l) = signs[l] * std::abs(g(rng));
                    x *= std::pow(uni(rng), 1.0 / dim) / x.norm();
                    const Vec y = corner_map(x, signs);
                    const Vec back = corner_map_inverse(y, signs);
                    const Vec y2 = corner_map(corner_map_inverse(y, signs), signs);
                    const double err = std::max({(back - x).norm(), (y2 - y).norm(), std::abs(y.lpNorm<1>() - x.norm())});
                    worst = std::max(worst, err);
                    c.expect(err <= kTol, "dim " + std::to_string(dim) + " error " + sci(err));
                }
            }
        rep.push_back(c.done("max error " + sci(worst)));
    }
    std::vector<Cell> cells;
    for (const Cell& cell : enumerate_cells(n))
        if (!is_void(cell)) cells.push_back(cell);
    {
        Check c("geometry", "gram_factor");
        const double vv = n + 1, vvj = n, vjvj = n, vjvk = n - 1;
        for (const Cell& cell : cells) {
            const auto signs = cone_signs(cell.index, cell.tau);
            if (signs.empty()) continue;
            const Eigen::MatrixXd G = gram_matrix(cell.index, cell.tau, n);
            const Eigen::MatrixXd M = gram_factor(cell.index, cell.tau, n);
            const std::vector<int> J = labels_of(cell.index.j());
            const auto nj = static_cast<Eigen::Index>(J.size());
            bool entries = true;
            for (Eigen::Index a = 0; a < G.rows(); ++a)
                for (Eigen::Index b = 0; b < G.cols(); ++b) {
                    const bool va = a == nj, vb = b == nj;
                    const double want = va && vb ? vv : (va || vb) ? vvj : a == b ? vjvj : vjvk;
                    entries = entries && G(a, b) == want;
                }
            const bool upper = M.isUpperTriangular();
            const double err = (M.transpose() * M - G).norm();
            c.expect(entries && upper && err <= 1e-12 * std::max(1.0, G.norm()) && std::abs(M.determinant()) > 1e-12,
                     to_string(cell));
        }
        rep.push_back(c.done());
    }
    {
        Check mem("geometry", "param_membership"), orth("geometry", "imaginary_part_vanishes"),
            face("geometry", "outer_face_on_sphere"), bary("geometry", "barycenter_interior");
        std::mt19937_64 rng(o.seed + 2);
        double worst_im = 0, worst_face = 0;
        for (const Cell& cell : cells) {
            const auto signs = cone_signs(cell.index, cell.tau);
            const int m = static_cast<int>(signs.size());
            const int k = static_cast<int>(cell.index.flag.size());
            const bool eq = cell.index.rel == Rel::EQ;
            const int j0 = min_label(cell.index.flag.front());
            for (int s = 0; s < o.samples; ++s) {
                const Vec corner = eq ? dirichlet(rng, m, m) : dirichlet(rng, m + 1, m);
                const Vec w = dirichlet(rng, k, k);
                const Point z = param_point(cell.index, cell.tau, corner, w, n);
                mem.expect(cell_membership(z, cell.index, cell.tau, n), to_string(cell));
                const double im = std::abs(bilinear_square(z - sphere_center(j0, n)).imag());
                worst_im = std::max(worst_im, im);
                orth.expect(im <= kTol, to_string(cell) + " Im " + sci(im));
                if (!eq && m > 0) {
                    const Vec outer = dirichlet(rng, m, m);
                    const double q = bilinear_square(param_point(cell.index, cell.tau, outer, w, n) - sphere_center(j0, n)).real();
                    worst_face = std::max(worst_face, std::abs(q - 1.0));
                    face.expect(std::abs(q - 1.0) <= kTol, to_string(cell));
                }
            }
            if (!eq) {
                const Vec corner = Vec::Constant(m, 1.0 / (m + 1));
                const Vec w = Vec::Constant(k, 1.0 / k);
                bary.expect(cell_interior(param_point(cell.index, cell.tau, corner, w, n), cell.index, cell.tau, n),
                            to_string(cell));
            }
        }
        rep.push_back(mem.done());
        rep.push_back(orth.done("max |Im| " + sci(worst_im)));
        rep.push_back(face.done("max deviation " + sci(worst_face)));
        rep.push_back(bary.done());
    }
    {
        Check c("geometry", "cone_orthogonality");
        std::mt19937_64 rng(o.seed + 3);
        const ConeBasis b = cone_basis(n);
        for (const Flag& f : enumerate_flags(n)) {
            const Vec w = dirichlet(rng, static_cast<int>(f.size()), static_cast<int>(f.size()));
            Vec y = Vec::Zero(n + 1);
            for (std::size_t l = 0; l < f.size(); ++l) y += w(static_cast<Eigen::Index>(l)) * center(f[l], n).imag();
            y(min_label(f.front()) - 1) -= 1.0;
            for (int j : labels_of(full_mask(n) & ~f.back())) c.expect(std::abs(b.vj[j - 1].dot(y)) <= kTol, "j=" + std::to_string(j));
            c.expect(std::abs(b.v.dot(y)) <= kTol, "v");
        }
        rep.push_back(c.done());
    }
    if (n <= 2) {
        Check c("geometry", "interior_disjoint");
        std::mt19937_64 rng(o.seed + 4);
        for (const Cell& cell : cells) {
            const auto signs = cone_signs(cell.index, cell.tau);
            const int m = static_cast<int>(signs.size());
            const int k = static_cast<int>(cell.index.flag.size());
            const bool eq = cell.index.rel == Rel::EQ;
            for (int s = 0; s < 3; ++s) {
                const Vec corner = eq ? dirichlet(rng, m, m) : dirichlet(rng, m + 1, m);
                const Point z = param_point(cell.index, cell.tau, corner, dirichlet(rng, k, k), n);
                int hits = 0;
                std::string other;
                for (const Cell& d : cells)
                    if (cell_interior(z, d.index, d.tau, n)) {
                        ++hits;
                        if (!(d == cell)) other = to_string(d);
                    }
                c.expect(hits == 1 && other.empty(),
                         to_string(cell) + (other.empty() ? " not in its own interior" : " also in " + other));
            }
        }
        rep.push_back(c.done());
    }
    {
        Check c("geometry", "retraction");
        std::mt19937_64 rng(o.seed + 5);
        std::normal_distribution<double> g;
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (int s = 0; s < 100; ++s) {
            Vec x(n + 1), y(n + 1);
            for (int r = 0; r <= n; ++r) x(r) = g(rng), y(r) = g(rng);
            if (n == 0) y.setZero();
            else y -= (y.dot(x) / x.squaredNorm()) * x;
            y *= 0.7 * uni(rng) * 3.0 / std::max(1.0, y.norm());
            x *= std::sqrt(1.0 + y.squaredNorm()) / x.norm();
            Point z(n + 1);
            for (int r = 0; r <= n; ++r) z(r) = {x(r), y(r)};
            const double t = uni(rng);
            const Point gt = retraction_step(z, t);
            const Point g1 = retraction_step(z, 1.0);
            const Point real = retraction_step(g1, t);
            c.expect((retraction_step(z, 0.0) - z).norm() <= kTol, "g(z,0) != z");
            c.expect(std::abs(bilinear_square(gt) - 1.0) <= kTol, "left the sphere at t=" + sci(t));
            c.expect(g1.imag().norm() <= kTol && std::abs(g1.real().norm() - 1.0) <= kTol, "g(z,1) not on S^n");
            c.expect((real - g1).norm() <= kTol, "real point moved");
        }
        rep.push_back(c.done());
    }
    {
        Check c("geometry", "general_position");
        double worst = std::numeric_limits<double>::infinity();
        for (Mask I = 1; I <= full_mask(n); ++I) {
            const auto r = check_general_position(I, n, 100, o.seed + 6 + I);
            worst = std::min(worst, r.min_singular);
            c.expect(r.ok, "I=" + mask_string(I) + " sigma_min " + sci(r.min_singular) + " residual " + sci(r.max_residual));
        }
        rep.push_back(c.done("min singular value " + sci(worst) + ", seed " + std::to_string(o.seed + 6) + "+I"));
    }
    return rep;
}

Report verify_intersection(const SuiteOptions& o) {
    const int n = o.n;
    Report rep;
    {
        Check c("intersection", "basis_change_det");
        for (int N = 1; N <= 9; ++N)
            for (int k = 1; k <= N; ++k)
                c.expect(basis_change_det(N - 1, k) == parity(k - 1), "n=" + std::to_string(N - 1) + " k=" + std::to_string(k));
        rep.push_back(c.done());
    }
    if (n >= 1) {
        Check split("intersection", "index_case_split"), unit("intersection", "index_single_sphere"),
            inv("intersection", "transverse_invariance");
        std::mt19937_64 rng(o.seed + 7);
        std::normal_distribution<double> g;
        for (Mask I = 1; I <= full_mask(n); ++I) {
            const IndexCertificate cert = index_with_imaginary(I, n);
            const int want = popcount(I) == 1 ? 1 : 0;
            std::string why = "I=" + mask_string(I) + ": " + std::to_string(cert.value) + " via " + cert.method;
            if (!cert.unwitnessed.empty()) why += ", no witness for " + to_string(cert.unwitnessed.front());
            split.expect(cert.value == want && cert.certified, why);
            if (popcount(I) == 1)
                unit.expect(cert.certified && cert.value == 1 && cert.det == parity(min_label(I) - 1), why);
            const IntChain E = generator_E(I, n);
            for (int s = 0; s < 8; ++s) {
                Eigen::VectorXd u(n + 1);
                for (int r = 0; r <= n; ++r) u(r) = g(rng);
                inv.expect(transverse_index(E, n, u) == cert.transverse, "I=" + mask_string(I));
            }
        }
        rep.push_back(split.done());
        rep.push_back(unit.done());
        rep.push_back(inv.done());

        Check vp("intersection", "vanishing_pairing");
        for (Mask J = 1; J <= full_mask(n); ++J)
            for (Mask I = 1; I <= full_mask(n); ++I) {
                const VanishingPairing p = vanishing_pair_index(J, I, n);
                vp.expect(p.value == p.closed_form, "sphere " + mask_string(J) + " cell " + mask_string(I) + ": " +
                                                        std::to_string(p.value) + " vs " + std::to_string(p.closed_form));
            }
        rep.push_back(vp.done());
    }
    {
        Check c("intersection", "sign_formulas");
        for (int k = 0; k <= 8; ++k)
            c.expect(sphere_self_intersection(k) == (k % 2 ? 0 : 2 * parity(k / 2)), "self k=" + std::to_string(k));
        for (int D = 2; D <= 12; ++D)
            c.expect(pl_sign(D - 1, 2) == parity(static_cast<long long>(D + 1) * (D + 2) / 2), "pl D=" + std::to_string(D));
        for (int N = 0; N <= 8; ++N)
            for (int k = 0; k <= 8; ++k) {
                // exponent N(k + (N+1)/2) evaluated with halves kept exact
                const long long twice = static_cast<long long>(N) * (2 * k + N + 1);
                c.expect(duality_sign(N, k) == parity(twice / 2), "duality N=" + std::to_string(N));
            }
        rep.push_back(c.done());
    }
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"boundary", "signs", "cube", "generators", "geometry", "intersection"};
    return names;
}

Report run_suite(const std::string& suite, const SuiteOptions& o) {
    if (suite == "all") {
        Report all;
        for (const auto& s : suite_names()) {
            Report r = run_suite(s, o);
            all.insert(all.end(), r.begin(), r.end());
        }
        return all;
    }
    if (suite == "boundary") return verify_boundary(o);
    if (suite == "signs") return verify_signs(o);
    if (suite == "cube") return verify_cube(o);
    if (suite == "generators") return verify_generators(o);
    if (suite == "geometry") return verify_geometry(o);
    if (suite == "intersection") return verify_intersection(o);
    throw std::invalid_argument("unknown suite: " + suite);
}

bool all_passed(const Report& r) {
    for (const auto& c : r)
        if (!c.passed) return false;
    return true;
}

std::string format_report(const Report& r) {
    std::string out;
    for (const auto& c : r)
        out += std::string(c.passed ? "PASS " : "FAIL ") + c.suite + "/" + c.name + " [" + std::to_string(c.cases) +
               "] " + c.detail + "\n";
    return out;
}

}  // namespace qah
