#include "qah/intersection.hpp"

#include <random>
#include <stdexcept>

#include "qah/homology.hpp"

namespace qah {

namespace {

int parity(long long e) { return (e % 2 == 0) ? 1 : -1; }

Eigen::VectorXd generic_direction(int n) {
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(n));
    std::normal_distribution<double> g;
    Eigen::VectorXd u(n + 1);
    for (int r = 0; r <= n; ++r) u(r) = g(rng);
    return u;
}

Coeff dot(const IntChain& a, const IntChain& b) {
    Coeff s = 0;
    for (const auto& [c, v] : a.terms()) s += v * b.coeff(c);
    return s;
}

}  // namespace

long basis_change_det(int n, int k) {
    if (k < 1 || k > n + 1) throw std::invalid_argument("basis_change_det needs 1 <= k <= n+1");
    DenseMatrix a(static_cast<std::size_t>(n + 1), std::vector<mpz_class>(static_cast<std::size_t>(n + 1)));
    std::size_t col = 0;
    for (int j = 1; j <= n + 2; ++j) {
        if (j == k) continue;
        // column j <= n+1 is v_j, the last one is v
        for (int r = 1; r <= n + 1; ++r) a[r - 1][col] = (j <= n + 1 && r == j) ? 0 : 1;
        ++col;
    }
    return determinant(std::move(a)).get_si();
}

int top_cell_orientation(const Cell& c, int n) {
    const CellIndex& i = c.index;
    if (i.flag.size() != 1 || popcount(i.flag[0]) != 1 || i.rel != Rel::LE || c.tau == 0 ||
        i.j() != (full_mask(n) & ~i.flag[0]))
        throw std::invalid_argument("not a top cell over a single center");
    return parity(n + 1 + popcount(i.j_le)) * c.tau * static_cast<int>(basis_change_det(n, min_label(i.flag[0])));
}

int transverse_index(const IntChain& E, int n, const Eigen::VectorXd& u) {
    // Only cells over a single center with a full cone reach a generic real translate;
    // every other cell has a real part of dimension at most n.
    const int N = n + 1;
    int total = 0;
    for (int i = 1; i <= N; ++i) {
        Eigen::MatrixXd B(N, N);
        int col = 0;
        for (int j = 1; j <= N; ++j) {
            if (j == i) continue;
            for (int r = 0; r < N; ++r) B(r, col) = (r == j - 1) ? 0.0 : 1.0;
            ++col;
        }
        B.col(col) = Eigen::VectorXd::Ones(N);
        const Eigen::VectorXd d = B.fullPivLu().solve(-u);
        Mask le = 0, ge = 0;
        col = 0;
        for (int j = 1; j <= N; ++j) {
            if (j == i) continue;
            (d(col) < 0 ? le : ge) |= bit(j);
            ++col;
        }
        const Cell c{CellIndex{{bit(i)}, le, ge, Rel::LE}, d(col) > 0 ? 1 : -1};
        const Coeff coef = E.coeff(c);
        if (coef != 0) total += static_cast<int>(coef) * top_cell_orientation(c, n);
    }
    return total;
}

IndexCertificate index_with_imaginary(Mask I, int n) {
    if (I == 0 || (I & ~full_mask(n)) != 0) throw std::invalid_argument("I must be a nonempty subset of 1..n+1");
    IndexCertificate cert;
    cert.I = I;
    cert.n = n;
    const IntChain E = generator_E(I, n);
    cert.transverse = transverse_index(E, n, generic_direction(n));

    if (popcount(I) == 1) {
        // E_{k} contains the cell with all cone coefficients nonnegative; the index is the
        // sign of that cell in E times the orientation match at a_k.
        const int k = min_label(I);
        const Cell top{CellIndex{{I}, 0, full_mask(n) & ~I, Rel::LE}, 1};
        cert.method = "orientation";
        cert.cell_coeff = E.coeff(top);
        cert.det = basis_change_det(n, k);
        cert.cell_sign = static_cast<int>(cert.cell_coeff) * parity(n + 1);
        cert.value = cert.cell_sign * static_cast<int>(cert.det);
        cert.certified = (cert.cell_coeff == 1 || cert.cell_coeff == -1) && cert.value == cert.transverse;
        return cert;
    }

    for (const auto& [c, v] : E.terms()) {
        const Mask outside = c.index.j_ge & ~I;
        if (outside != 0)
            cert.witnesses.push_back(DisjointnessWitness{c, min_label(outside)});
        else
            cert.unwitnessed.push_back(c);
    }
    if (cert.unwitnessed.empty()) {
        cert.method = "disjoint";
        cert.value = 0;
        cert.certified = true;
    } else {
        cert.method = "transverse";
        cert.value = cert.transverse;
        cert.certified = false;
    }
    return cert;
}

int sphere_self_intersection(int k) {
    if (k < 0) throw std::invalid_argument("sphere dimension must be nonnegative");
    return k % 2 != 0 ? 0 : 2 * parity(k / 2);
}

int pl_sign(int n, int m) {
    const long long d = n - m;
    return parity(d * (d + 1) / 2);
}

int duality_sign(int N, int k) {
    const long long a = N;
    return parity(a * k + a * (a + 1) / 2);
}

VanishingPairing vanishing_pair_index(Mask sphere_I, Mask cell_I, int n) {
    const Mask full = full_mask(n);
    if (sphere_I == 0 || cell_I == 0 || (sphere_I & ~full) != 0 || (cell_I & ~full) != 0)
        throw std::invalid_argument("vanishing pairing needs nonempty subsets of 1..n+1");
    VanishingPairing p;
    const int m = popcount(sphere_I);
    p.k = n + 1 - m;
    // The iterated boundary localizes each class at its own pinch; the vanishing sphere of
    // sphere_I only sees the local cell at c_{sphere_I}.
    const IntChain local = iterated_boundary(generator_E(sphere_I, n), sphere_I);
    const IntChain probe = iterated_boundary(generator_E(cell_I, n), cell_I);
    const Coeff norm = dot(local, local);
    const Coeff overlap = dot(probe, local);
    if (norm == 0 || overlap % norm != 0) throw std::logic_error("local cell is not a multiple of the vanishing cell");
    p.lambda = static_cast<int>(overlap / norm);
    p.duality = duality_sign(m, p.k);
    p.self = sphere_self_intersection(p.k);
    p.value = p.duality * p.lambda * p.self;
    p.closed_form = vanishing_closed_form(sphere_I, cell_I, n);
    return p;
}

int vanishing_closed_form(Mask sphere_I, Mask cell_I, int n) {
    if (sphere_I != cell_I) return 0;
    if ((n + 1 - popcount(sphere_I)) % 2 != 0) return 0;
    const long long a = n + 1;
    return 2 * parity(a * (a + 1) / 2);
}

}  // namespace qah
