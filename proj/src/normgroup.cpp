#include "serrewt/normgroup.hpp"

#include <numeric>
#include <sstream>

namespace swt {

namespace {

// extended gcd inverse of a mod m, both positive and coprime
int inv_mod(int a, int m) {
    int t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        int q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw SwtError("inv_mod: not coprime");
    return ((t % m) + m) % m;
}

// determinant via the Berkowitz characteristic polynomial (division free)
LocalElem berkowitz_det(const std::vector<std::vector<LocalElem>> &A, const TowerPtr &t) {
    const size_t n = A.size();
    std::vector<LocalElem> poly{LocalElem::one(t)};
    for (size_t i = 1; i <= n; ++i) {
        std::vector<LocalElem> q(i + 1, LocalElem::zero(t));
        q[0] = LocalElem::one(t);
        q[1] = -A[i - 1][i - 1];
        if (i >= 2) {
            std::vector<LocalElem> Cv(i - 1, LocalElem::zero(t)), Rv(i - 1, LocalElem::zero(t));
            for (size_t r = 0; r + 1 < i; ++r) Cv[r] = A[r][i - 1];
            for (size_t c = 0; c + 1 < i; ++c) Rv[c] = A[i - 1][c];
            std::vector<LocalElem> cur = Cv;
            for (size_t j = 2; j <= i; ++j) {
                LocalElem dot = LocalElem::zero(t);
                for (size_t k = 0; k + 1 < i; ++k) dot = dot + Rv[k] * cur[k];
                q[j] = -dot;
                if (j < i) {
                    std::vector<LocalElem> nxt(i - 1, LocalElem::zero(t));
                    for (size_t r = 0; r + 1 < i; ++r) {
                        LocalElem s = LocalElem::zero(t);
                        for (size_t k = 0; k + 1 < i; ++k) s = s + A[r][k] * cur[k];
                        nxt[r] = s;
                    }
                    cur = std::move(nxt);
                }
            }
        }
        std::vector<LocalElem> np(i + 1, LocalElem::zero(t));
        for (size_t s = 0; s < i + 1; ++s) {
            LocalElem acc = LocalElem::zero(t);
            for (size_t j = 0; j <= s && j < q.size(); ++j)
                if (s - j < poly.size()) acc = acc + q[j] * poly[s - j];
            np[s] = acc;
        }
        poly = std::move(np);
    }
    LocalElem det = poly[n];
    if (n % 2 == 1) det = -det;
    return det;
}

} // namespace

WildExtension wild_extension(const TowerPtr &tower, std::vector<LocalElem> g) {
    WildExtension ext;
    ext.tower = tower;
    ext.D = int(g.size()) - 1;
    if (ext.D < 1) throw FixtureError("defining polynomial must have positive degree");
    if (!(g.back() == LocalElem::one(tower))) throw FixtureError("defining polynomial must be monic");
    ext.g = std::move(g);

    // Newton polygon: require a single segment from (0, v(g_0)) to (D, 0)
    int v0 = ext.g[0].v_pi();
    if (v0 <= 0 || v0 >= tower->horizon())
        throw FixtureError("constant term must have positive finite valuation");
    for (int i = 1; i < ext.D; ++i) {
        if (ext.g[size_t(i)].is_zero()) continue;
        int vi = ext.g[size_t(i)].v_pi();
        if (std::int64_t(vi) * ext.D < std::int64_t(v0) * (ext.D - i))
            throw FixtureError("Newton polygon has several segments; expected a totally "
                               "ramified defining polynomial");
    }
    ext.v_theta = v0; // v_N(theta) with v_N(pi) = D
    if (std::gcd(ext.v_theta, ext.D) != 1)
        throw FixtureError("root valuation " + std::to_string(v0) + "/" + std::to_string(ext.D) +
                           " does not generate; cannot synthesize a uniformizer");
    ext.eisenstein = (ext.v_theta == 1);
    ext.unif_a = inv_mod(ext.v_theta % ext.D, ext.D);
    ext.unif_b = int((1 - std::int64_t(ext.unif_a) * ext.v_theta) / ext.D);
    return ext;
}

LocalElem norm_element(const WildExtension &ext, const std::vector<LocalElem> &h) {
    const TowerPtr &t = ext.tower;
    const int D = ext.D;
    bool zero = true;
    for (const auto &c : h)
        if (!c.is_zero()) zero = false;
    if (zero) throw ZeroElement("norm of zero");
    // reduce h mod g, then columns are h * x^j mod g
    std::vector<LocalElem> col(h);
    while (int(col.size()) > D) {
        LocalElem top = col.back();
        col.pop_back();
        if (top.is_zero()) continue;
        size_t off = col.size() - size_t(D);
        for (int i = 0; i < D; ++i)
            col[off + size_t(i)] = col[off + size_t(i)] - top * ext.g[size_t(i)];
    }
    col.resize(size_t(D), LocalElem::zero(t));
    std::vector<std::vector<LocalElem>> mat(size_t(D), std::vector<LocalElem>(size_t(D), LocalElem::zero(t)));
    for (int j = 0; j < D; ++j) {
        for (int i = 0; i < D; ++i) mat[size_t(i)][size_t(j)] = col[size_t(i)];
        if (j + 1 < D) {
            // col <- x * col mod g
            LocalElem top = col[size_t(D - 1)];
            for (int i = D - 1; i >= 1; --i) col[size_t(i)] = col[size_t(i - 1)];
            col[0] = LocalElem::zero(t);
            if (!top.is_zero())
                for (int i = 0; i < D; ++i)
                    col[size_t(i)] = col[size_t(i)] - top * ext.g[size_t(i)];
        }
    }
    return berkowitz_det(mat, t);
}

namespace {

struct NormGen {
    std::vector<LocalElem> h; // polynomial in theta
    int pi_clear = 0;         // actual element is h(theta) / pi^pi_clear
};

std::vector<NormGen> generator_family(const WildExtension &ext, int bound) {
    const TowerPtr &t = ext.tower;
    std::vector<NormGen> gens;
    auto theta_poly = [&](int deg) {
        std::vector<LocalElem> h(size_t(deg + 1), LocalElem::zero(t));
        h[size_t(deg)] = LocalElem::one(t);
        return h;
    };
    // theta + [c] over all residue representatives, theta itself, pi
    gens.push_back({theta_poly(1), 0});
    for (std::int64_t idx = 0; idx < t->l_cfg->q; ++idx) {
        auto h = theta_poly(1);
        h[0] = LocalElem::from_witt(t, teichmuller(FqElem::from_index(t->l_cfg, idx), t->W));
        gens.push_back({std::move(h), 0});
    }
    gens.push_back({{LocalElem::pi_power(t, 1)}, 0});
    // Teichmueller lift of a generator of l^x
    gens.push_back({{LocalElem::from_witt(t, teichmuller(canonical_generator(t->l_cfg), t->W))}, 0});

    // one-units 1 + [x] theta^A pi^B at every N-level j
    for (int j = 1; j <= bound; ++j) {
        if (j % int(t->p) == 0 && j != bound) continue;
        int A = int((std::int64_t(j) * ext.unif_a) % ext.D);
        std::int64_t B = (std::int64_t(j) - std::int64_t(A) * ext.v_theta) / ext.D;
        for (int r = 0; r < t->l_cfg->m; ++r) {
            std::vector<std::int64_t> coef(size_t(t->l_cfg->m), 0);
            coef[size_t(r)] = 1;
            WittElem x = teichmuller(FqElem(t->l_cfg, coef), t->W);
            NormGen gen;
            if (B >= 0) {
                gen.h = std::vector<LocalElem>(size_t(A + 1), LocalElem::zero(t));
                gen.h[0] = LocalElem::one(t);
                gen.h[size_t(A)] = gen.h[size_t(A)] +
                                   LocalElem::from_witt(t, x) * LocalElem::pi_power(t, int(B));
                gen.pi_clear = 0;
            } else {
                gen.h = std::vector<LocalElem>(size_t(A + 1), LocalElem::zero(t));
                gen.h[0] = LocalElem::pi_power(t, int(-B));
                gen.h[size_t(A)] = gen.h[size_t(A)] + LocalElem::from_witt(t, x);
                gen.pi_clear = int(-B);
            }
            gens.push_back(std::move(gen));
        }
    }
    return gens;
}

} // namespace

NormSubgroup norm_subgroup(const WildExtension &ext, int level_bound) {
    const TowerPtr &t = ext.tower;
    const std::int64_t p = t->p;
    const int eN = t->e * ext.D;
    const int bound = level_bound > 0 ? level_bound : int(std::int64_t(eN) * p / (p - 1));

    NormSubgroup ns(t);
    for (const auto &gen : generator_family(ext, bound)) {
        LocalElem nm = norm_element(ext, gen.h);
        if (nm.is_zero()) throw PrecisionExceeded("norm vanished at working precision");
        int v = nm.v_pi();
        // ensure enough precision survives the pi-power division for digits
        if (t->horizon() - (v + t->e * (v / t->e + 2)) < int(std::int64_t(t->e) * p / (p - 1)))
            throw PrecisionExceeded("tower precision too small for norm digits; raise N");
        UnitDigits d = decompose_unit(nm);
        d.pi_exp -= std::int64_t(ext.D) * gen.pi_clear; // undo the clearing factor
        ns.rows.add_row(ns.basis.vector_of(d));
    }
    ns.index = 1;
    for (int i = 0; i < ns.basis.dim - ns.rows.rank(); ++i) ns.index *= p;
    return ns;
}

bool norm_contains(const NormSubgroup &ns, const UnitDigits &d) {
    return ns.rows.contains(ns.basis.vector_of(d));
}

bool norm_contains(const NormSubgroup &ns, const LocalElem &x) {
    return norm_contains(ns, decompose_unit(x));
}

bool galois_stable(const NormSubgroup &ns) {
    const TowerPtr &t = ns.basis.tower;
    std::vector<GalElem> gens;
    gens.push_back({0, 1});
    if (t->g > 1) gens.push_back({1, 0});
    for (const auto &sigma : gens) {
        // image of each digit-basis vector under sigma
        std::vector<std::vector<std::int64_t>> mat;
        for (int j = 0; j < ns.basis.dim; ++j) {
            LocalElem img = galois_apply(sigma, ns.basis.basis_unit(j));
            mat.push_back(ns.basis.vector_of(decompose_unit(img)));
        }
        for (const auto &row : ns.rows.rows()) {
            std::vector<std::int64_t> img(size_t(ns.basis.dim), 0);
            for (int j = 0; j < ns.basis.dim; ++j) {
                if (row[size_t(j)] == 0) continue;
                for (int i = 0; i < ns.basis.dim; ++i)
                    img[size_t(i)] = (img[size_t(i)] + row[size_t(j)] * mat[size_t(j)][size_t(i)]) % t->p;
            }
            if (!ns.rows.contains(img)) return false;
        }
    }
    return true;
}

} // namespace swt
