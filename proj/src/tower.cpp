#include "serrewt/tower.hpp"

#include <numeric>
#include <sstream>

namespace swt {

namespace {

std::int64_t ipow(std::int64_t b, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

} // namespace

FqElem solve_top_absorb(const TowerPtr &t, const FqElem &a);

TowerPtr tower_create(std::int64_t p, int f, int g, int e,
                      const std::vector<std::int64_t> &unit_coeffs, int N) {
    auto t = std::make_shared<TameTower>();
    t->p = p;
    t->f = f;
    t->g = g;
    t->e = e;
    t->N = N;
    if (g % p == 0) throw BadUnramifiedDegree("p | g");
    std::int64_t pf1 = ipow(p, f) - 1;
    if (e <= 0 || pf1 % e != 0) throw BadRamification(std::to_string(e) + " does not divide p^f-1");
    t->k_cfg = field_create(p, f);
    t->l_cfg = field_create(p, f * g);
    t->W = witt_ring(t->l_cfg, N);
    t->u = WittElem(t->W, unit_coeffs);
    if (!t->u.is_unit()) throw SwtError("tower unit u is not a unit");
    if (!(t->u.frobenius(f) == t->u) && g > 1)
        throw SwtError("tower unit u must lie in W(k)");

    FqElem gen_k = canonical_generator(t->k_cfg);
    FqElem zeta_k = gen_k.pow(pf1 / e);
    t->zeta = embed(zeta_k, t->l_cfg);
    t->zeta_pows.reserve(size_t(e));
    for (int j = 0; j < e; ++j)
        t->zeta_pows.push_back(teichmuller(t->zeta.pow(j), t->W));

    if (e % int(p - 1) == 0) {
        // delta = [w] pi^(e/(p-1)) with w^(p-1) = -u^{-1}, when solvable in l
        FqElem target = (-(t->u.inverse())).residue_elem();
        std::optional<FqElem> root;
        for (std::int64_t idx = 1; idx < t->l_cfg->q; ++idx) {
            FqElem c = FqElem::from_index(t->l_cfg, idx);
            if (c.pow(p - 1) == target) { root = c; break; }
        }
        if (root) {
            t->has_top = true;
            t->top_level = e * int(p) / int(p - 1);
            std::vector<WittElem> poly; // w^(p-1) + u^{-1} = 0
            poly.resize(size_t(p), WittElem::zero(t->W));
            poly[0] = t->u.inverse();
            poly[size_t(p - 1)] = WittElem::one(t->W);
            WittElem w = hensel_root(t->W, poly, *root);
            FqElem cbar = w.pow(p).residue_elem(); // c = delta^p / pi^(ep/(p-1)) = w^p
            t->top_inv_const = cbar.inverse();
            // reference digit with trace-class value 1
            FqElem b1 = FqElem::zero(t->l_cfg);
            for (std::int64_t idx = 1; idx < t->l_cfg->q; ++idx) {
                FqElem c = FqElem::from_index(t->l_cfg, idx);
                if (trace_to_prime(c) == FqElem::one(t->l_cfg)) { b1 = c; break; }
            }
            t->top_ref_digit = b1 * cbar;
        }
    }

    auto rats = artin_hasse_rational(p, t->horizon() + 1);
    t->ah_coeffs.reserve(rats.size());
    for (const auto &r : rats)
        t->ah_coeffs.push_back(rat_mod_pn(r, p, t->W->pN));
    return TowerPtr(t);
}

LocalElem::LocalElem(TowerPtr t, std::vector<WittElem> coords) : t_(std::move(t)), c_(std::move(coords)) {
    c_.resize(size_t(t_->e), WittElem::zero(t_->W));
}

LocalElem LocalElem::zero(const TowerPtr &t) {
    return LocalElem(t, {});
}

LocalElem LocalElem::one(const TowerPtr &t) {
    std::vector<WittElem> c{WittElem::one(t->W)};
    return LocalElem(t, std::move(c));
}

LocalElem LocalElem::from_witt(const TowerPtr &t, const WittElem &w) {
    std::vector<WittElem> c{w};
    return LocalElem(t, std::move(c));
}

LocalElem LocalElem::pi_power(const TowerPtr &t, int k) {
    if (k < 0) throw SwtError("pi_power: negative exponent");
    int r = k % t->e, q = k / t->e;
    std::vector<WittElem> c(size_t(t->e), WittElem::zero(t->W));
    c[size_t(r)] = t->u.pow(q).times_p(q);
    return LocalElem(t, std::move(c));
}

bool LocalElem::is_zero() const {
    for (const auto &w : c_)
        if (!w.is_zero()) return false;
    return true;
}

int LocalElem::v_pi() const {
    int best = t_->horizon();
    for (int j = 0; j < t_->e; ++j) {
        if (c_[size_t(j)].is_zero()) continue;
        best = std::min(best, j + t_->e * c_[size_t(j)].val_p());
    }
    return best;
}

static void check_same_tower(const LocalElem &a, const LocalElem &b) {
    if (!a.tower() || !b.tower() || !(*a.tower() == *b.tower()))
        throw SwtError("tower mismatch");
}

LocalElem operator+(const LocalElem &a, const LocalElem &b) {
    check_same_tower(a, b);
    std::vector<WittElem> c = a.coords();
    for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + b.coords()[i];
    return LocalElem(a.tower(), std::move(c));
}

LocalElem operator-(const LocalElem &a, const LocalElem &b) {
    check_same_tower(a, b);
    std::vector<WittElem> c = a.coords();
    for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] - b.coords()[i];
    return LocalElem(a.tower(), std::move(c));
}

LocalElem LocalElem::operator-() const {
    std::vector<WittElem> c = c_;
    for (auto &w : c) w = -w;
    return LocalElem(t_, std::move(c));
}

LocalElem operator*(const LocalElem &a, const LocalElem &b) {
    check_same_tower(a, b);
    const TowerPtr &t = a.tower();
    const int e = t->e;
    std::vector<WittElem> full(size_t(2 * e - 1), WittElem::zero(t->W));
    for (int i = 0; i < e; ++i) {
        if (a.coords()[size_t(i)].is_zero()) continue;
        for (int j = 0; j < e; ++j) {
            if (b.coords()[size_t(j)].is_zero()) continue;
            full[size_t(i + j)] = full[size_t(i + j)] + a.coords()[size_t(i)] * b.coords()[size_t(j)];
        }
    }
    WittElem up = t->u.times_p(1);
    std::vector<WittElem> c(full.begin(), full.begin() + e);
    for (int k = e; k < 2 * e - 1; ++k)
        c[size_t(k - e)] = c[size_t(k - e)] + full[size_t(k)] * up;
    return LocalElem(t, std::move(c));
}

bool operator==(const LocalElem &a, const LocalElem &b) {
    if (!a.tower() || !b.tower() || !(*a.tower() == *b.tower())) return false;
    for (size_t i = 0; i < a.coords().size(); ++i)
        if (!(a.coords()[i] == b.coords()[i])) return false;
    return true;
}

LocalElem LocalElem::pow(std::int64_t k) const {
    if (k < 0) return inverse().pow(-k);
    LocalElem r = one(t_), base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

LocalElem LocalElem::inverse() const {
    if (v_pi() != 0) throw SwtError("inverse: not a unit");
    // Newton from the residue inverse
    FqElem r0 = residue().inverse();
    LocalElem z = from_witt(t_, WittElem(t_->W, std::vector<std::int64_t>(r0.coeffs().begin(), r0.coeffs().end())));
    LocalElem two = from_witt(t_, WittElem::from_int(t_->W, 2));
    int steps = 1;
    int acc = 1;
    while (acc < t_->horizon() + 1) { acc *= 2; ++steps; }
    for (int i = 0; i < steps + 1; ++i)
        z = z * (two - *this * z);
    return z;
}

LocalElem LocalElem::div_pi(int k) const {
    if (k == 0) return *this;
    if (k < 0) return *this * pi_power(t_, -k);
    int r = k % t_->e, q = k / t_->e;
    LocalElem x = *this;
    if (r > 0) {
        x = x * pi_power(t_, t_->e - r);
        q += 1;
    }
    WittElem uinvq = t_->u.inverse().pow(q);
    std::vector<WittElem> c = x.coords();
    for (auto &w : c) w = (w * uinvq).divide_exact_p(q);
    return LocalElem(t_, std::move(c));
}

FqElem LocalElem::residue() const {
    return c_[0].residue_elem();
}

LocalElem ah_unit(const FqElem &a, int n, const TowerPtr &t) {
    if (n < 1) throw SwtError("ah_unit: level must be >= 1");
    if (n >= t->horizon()) throw PrecisionExceeded("ah_unit: level beyond precision horizon");
    FqElem al = (*a.config() == *t->l_cfg) ? a : embed(a, t->l_cfg);
    std::vector<WittElem> c(size_t(t->e), WittElem::zero(t->W));
    WittElem ta = teichmuller(al, t->W);
    WittElem tak = WittElem::one(t->W);
    WittElem up = t->u.times_p(1);
    for (int k = 0; k * n < t->horizon() && size_t(k) < t->ah_coeffs.size(); ++k) {
        if (k > 0) tak = tak * ta;
        std::int64_t ek = t->ah_coeffs[size_t(k)];
        if (ek == 0 || tak.is_zero()) continue;
        int deg = k * n;
        int r = deg % t->e, q = deg / t->e;
        if (q >= t->N) continue;
        WittElem term = tak * WittElem::from_int(t->W, ek) * up.pow(q);
        c[size_t(r)] = c[size_t(r)] + term;
    }
    return LocalElem(t, std::move(c));
}

/// E evaluated at an arbitrary element of positive valuation.
static LocalElem ah_eval(const LocalElem &z, const TowerPtr &t) {
    if (z.v_pi() < 1) throw SwtError("ah_eval: argument needs positive valuation");
    LocalElem acc = LocalElem::one(t);
    LocalElem zk = LocalElem::one(t);
    int vz = z.v_pi();
    for (int k = 1; k * vz < t->horizon() && size_t(k) < t->ah_coeffs.size(); ++k) {
        zk = zk * z;
        std::int64_t ek = t->ah_coeffs[size_t(k)];
        if (ek == 0) continue;
        acc = acc + zk * LocalElem::from_witt(t, WittElem::from_int(t->W, ek));
    }
    return acc;
}

UnitDigits decompose_unit(const LocalElem &x) {
    const TowerPtr &t = x.tower();
    UnitDigits out;
    out.teich = FqElem::one(t->l_cfg);
    if (x.is_zero()) throw PrecisionExceeded("decompose_unit: zero element");
    int v = x.v_pi();
    out.pi_exp = v;
    LocalElem y = x.div_pi(v);
    FqElem r0 = y.residue();
    out.teich = r0;
    y = y * LocalElem::from_witt(t, teichmuller(r0, t->W).inverse());

    const std::int64_t p = t->p;
    // ep/(p-1) as a rational threshold
    auto beyond_threshold = [&](int m) { return std::int64_t(m) * (p - 1) > std::int64_t(t->e) * p; };
    auto at_threshold = [&](int m) { return std::int64_t(m) * (p - 1) == std::int64_t(t->e) * p; };

    LocalElem one = LocalElem::one(t);
    for (int guard = 0; guard <= t->horizon() + 2; ++guard) {
        LocalElem d = y - one;
        if (d.is_zero()) return out;
        int m = d.v_pi();
        if (m >= t->horizon()) return out;
        if (beyond_threshold(m)) return out; // U_m is inside the p-th powers
        FqElem a = d.div_pi(m).residue();
        if (at_threshold(m)) {
            if (t->has_top) {
                FqElem beta = a * t->top_inv_const;
                FqElem tr = trace_to_prime(beta);
                out.top_trace = tr.as_prime_int();
                return out; // remainder after removing the trace class is a p-th power
            }
            // no zeta_p in M: the level map b -> u*b + b^p is bijective, absorb
            FqElem b = solve_top_absorb(t, a);
            LocalElem w = (one + LocalElem::from_witt(t, teichmuller(b, t->W)) *
                                     LocalElem::pi_power(t, t->e / int(p - 1))).pow(p);
            y = y * w.inverse();
            continue;
        }
        if (m % p == 0) {
            // leading term is the p-th power of a level m/p unit
            FqElem b = a.pow(t->l_cfg->q / p); // p-th root
            LocalElem w = (one + LocalElem::from_witt(t, teichmuller(b, t->W)) *
                                     LocalElem::pi_power(t, m / int(p))).pow(p);
            y = y * w.inverse();
            continue;
        }
        out.digits[m] = a;
        y = y * ah_unit(a, m, t).inverse();
    }
    throw PrecisionExceeded("decompose_unit: did not terminate within the precision horizon");
}

FqElem solve_top_absorb(const TowerPtr &t, const FqElem &a) {
    // solve u*b + b^p = a over l; the map is F_p-linear and injective here
    const FqConfigPtr &l = t->l_cfg;
    FqElem ubar = t->u.residue_elem();
    const int dim = l->m;
    // build matrix columns: image of basis vectors
    std::vector<std::vector<std::int64_t>> mat(size_t(dim), std::vector<std::int64_t>(size_t(dim + 1), 0));
    for (int j = 0; j < dim; ++j) {
        std::vector<std::int64_t> ecoef(size_t(dim), 0);
        ecoef[size_t(j)] = 1;
        FqElem bj(l, ecoef);
        FqElem img = ubar * bj + bj.pow(t->p);
        for (int i = 0; i < dim; ++i) mat[size_t(i)][size_t(j)] = img.coeffs()[size_t(i)];
    }
    for (int i = 0; i < dim; ++i) mat[size_t(i)][size_t(dim)] = a.coeffs()[size_t(i)];
    // Gaussian elimination mod p
    const std::int64_t p = t->p;
    int row = 0;
    std::vector<int> pivot_col(size_t(dim), -1);
    for (int col = 0; col < dim && row < dim; ++col) {
        int pr = -1;
        for (int r = row; r < dim; ++r)
            if (mat[size_t(r)][size_t(col)] % p != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(mat[size_t(pr)], mat[size_t(row)]);
        std::int64_t inv = 1;
        for (std::int64_t v = 1; v < p; ++v)
            if ((mat[size_t(row)][size_t(col)] * v) % p == 1) { inv = v; break; }
        for (int c = 0; c <= dim; ++c) mat[size_t(row)][size_t(c)] = (mat[size_t(row)][size_t(c)] * inv) % p;
        for (int r = 0; r < dim; ++r) {
            if (r == row) continue;
            std::int64_t fct = mat[size_t(r)][size_t(col)] % p;
            if (fct == 0) continue;
            for (int c = 0; c <= dim; ++c)
                mat[size_t(r)][size_t(c)] = ((mat[size_t(r)][size_t(c)] - fct * mat[size_t(row)][size_t(c)]) % p + p) % p;
        }
        pivot_col[size_t(row)] = col;
        ++row;
    }
    std::vector<std::int64_t> sol(size_t(dim), 0);
    for (int r = 0; r < dim; ++r)
        if (pivot_col[size_t(r)] >= 0) sol[size_t(pivot_col[size_t(r)])] = mat[size_t(r)][size_t(dim)];
    FqElem b(l, sol);
    if (!(ubar * b + b.pow(t->p) == a)) throw SwtError("top absorption: system not solvable");
    return b;
}

LocalElem reconstruct(const UnitDigits &d, const TowerPtr &t) {
    LocalElem r = LocalElem::pi_power(t, int(d.pi_exp));
    if (!d.teich.is_zero())
        r = r * LocalElem::from_witt(t, teichmuller(d.teich, t->W));
    for (const auto &[lv, a] : d.digits)
        r = r * ah_unit(a, lv, t);
    if (t->has_top && d.top_trace != 0)
        r = r * ah_unit(t->top_ref_digit, t->top_level, t).pow(d.top_trace);
    return r;
}

bool is_pth_power(const LocalElem &x) {
    int v = x.v_pi();
    if (v % int(x.tower()->p) != 0) return false;
    UnitDigits d = decompose_unit(x);
    return d.trivial_unit_part();
}

LocalElem galois_apply(const GalElem &sigma, const LocalElem &x) {
    const TowerPtr &t = x.tower();
    int s = ((sigma.frob_power % t->g) + t->g) % t->g;
    int tt = ((sigma.tame_exp % t->e) + t->e) % t->e;
    std::vector<WittElem> c(size_t(t->e), WittElem::zero(t->W));
    for (int j = 0; j < t->e; ++j) {
        WittElem w = x.coords()[size_t(j)].frobenius(s * t->f);
        c[size_t(j)] = w * t->zeta_pows[size_t((std::int64_t(tt) * j) % t->e)];
    }
    return LocalElem(t, std::move(c));
}

bool verify_frobenius_shift(const LocalElem &beta) {
    const TowerPtr &t = beta.tower();
    const std::int64_t p = t->p;
    int v = beta.v_pi();
    if (std::int64_t(v) * p * (p - 1) <= t->e)
        throw ValuationTooSmall("need v_pi(beta) * p(p-1) > e");
    LocalElem bp = beta.pow(p);
    LocalElem minus_p_beta = -(beta * LocalElem::from_witt(t, WittElem::from_int(t->W, 1).times_p(1)));
    LocalElem ratio = ah_eval(bp, t) * ah_eval(minus_p_beta, t).inverse();
    return is_pth_power(ratio);
}

DigitBasis::DigitBasis(const TowerPtr &t) : tower(t) {
    const std::int64_t p = t->p;
    std::int64_t bound = std::int64_t(t->e) * p / (p - 1); // floor
    for (int n = 1; n <= int(bound); ++n)
        if (n % p != 0) levels.push_back(n);
    dim = 1 + int(levels.size()) * t->l_cfg->m + (t->has_top ? 1 : 0);
}

std::vector<std::int64_t> DigitBasis::vector_of(const UnitDigits &d) const {
    const std::int64_t p = tower->p;
    std::vector<std::int64_t> v(size_t(dim), 0);
    v[0] = ((d.pi_exp % p) + p) % p;
    int off = 1;
    for (int lv : levels) {
        auto it = d.digits.find(lv);
        if (it != d.digits.end())
            for (int i = 0; i < tower->l_cfg->m; ++i)
                v[size_t(off + i)] = it->second.coeffs()[size_t(i)];
        off += tower->l_cfg->m;
    }
    if (tower->has_top) v[size_t(off)] = ((d.top_trace % p) + p) % p;
    return v;
}

LocalElem DigitBasis::basis_unit(int index) const {
    if (index == 0) return LocalElem::pi_power(tower, 1);
    int off = 1;
    for (int lv : levels) {
        if (index < off + tower->l_cfg->m) {
            std::vector<std::int64_t> c(size_t(tower->l_cfg->m), 0);
            c[size_t(index - off)] = 1;
            return ah_unit(FqElem(tower->l_cfg, c), lv, tower);
        }
        off += tower->l_cfg->m;
    }
    if (tower->has_top && index == off)
        return ah_unit(tower->top_ref_digit, tower->top_level, tower);
    throw SwtError("basis_unit: index out of range");
}

std::string DigitBasis::coord_name(int index) const {
    if (index == 0) return "pi";
    int off = 1;
    for (int lv : levels) {
        if (index < off + tower->l_cfg->m) {
            std::ostringstream os;
            os << "lvl" << lv << "[" << (index - off) << "]";
            return os.str();
        }
        off += tower->l_cfg->m;
    }
    return "top";
}

LocalElem convert_uniformizer(const LocalElem &x, const TowerPtr &to, const WittElem &s_in_from) {
    const TowerPtr &from = x.tower();
    if (!(to->u == from->u * s_in_from.pow(to->e)))
        throw SwtError("convert_uniformizer: units are inconsistent");
    WittElem sinv = s_in_from.inverse();
    std::vector<WittElem> c(size_t(to->e), WittElem::zero(to->W));
    WittElem sj = WittElem::one(to->W);
    for (int j = 0; j < to->e; ++j) {
        c[size_t(j)] = WittElem(to->W, x.coords()[size_t(j)].coeffs()) * sj;
        sj = sj * WittElem(to->W, sinv.coeffs());
    }
    return LocalElem(to, std::move(c));
}

WittElem witt_embed(const WittElem &w, const WittRingPtr &big) {
    const WittRingPtr &small = w.ring();
    if (*small == *big) return w;
    FqElem sgen = FqElem::from_index(small->residue, small->residue->p); // the class of x
    WittElem T = teichmuller(embed(sgen, big->residue), big);
    WittElem acc = WittElem::zero(big);
    WittElem Tp = WittElem::one(big);
    for (int i = 0; i < small->residue->m; ++i) {
        acc = acc + Tp * WittElem::from_int(big, w.coeffs()[size_t(i)]);
        Tp = Tp * T;
    }
    return acc;
}

WittElem witt_restrict(const WittElem &w, const WittRingPtr &small) {
    const WittRingPtr &big = w.ring();
    if (*small == *big) return w;
    const int ms = small->residue->m, mb = big->residue->m;
    // columns: witt_embed of basis powers s^i
    std::vector<std::vector<std::int64_t>> mat(size_t(mb), std::vector<std::int64_t>(size_t(ms + 1), 0));
    for (int i = 0; i < ms; ++i) {
        std::vector<std::int64_t> c(size_t(ms), 0);
        c[size_t(i)] = 1;
        WittElem col = witt_embed(WittElem(small, c), big);
        for (int r = 0; r < mb; ++r) mat[size_t(r)][size_t(i)] = col.coeffs()[size_t(r)];
    }
    for (int r = 0; r < mb; ++r) mat[size_t(r)][size_t(ms)] = w.coeffs()[size_t(r)];
    // solve mod p^N with unit pivots
    const std::int64_t p = big->residue->p, pN = big->pN;
    int row = 0;
    std::vector<int> pivc(size_t(mb), -1);
    for (int col = 0; col < ms && row < mb; ++col) {
        int pr = -1;
        for (int r = row; r < mb; ++r)
            if (mat[size_t(r)][size_t(col)] % p != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(mat[size_t(pr)], mat[size_t(row)]);
        // invert pivot mod p^N
        std::int64_t piv = mat[size_t(row)][size_t(col)];
        std::int64_t inv = 1;
        {
            std::int64_t d0 = piv % p;
            for (std::int64_t v = 1; v < p; ++v)
                if ((d0 * v) % p == 1) { inv = v; break; }
            __int128 xx = inv;
            for (int it = 0; it < 8; ++it) {
                xx = xx * (2 - (__int128)piv * xx % pN) % pN;
                if (xx < 0) xx += pN;
            }
            inv = std::int64_t(xx);
        }
        for (int c = 0; c <= ms; ++c)
            mat[size_t(row)][size_t(c)] = std::int64_t((__int128)mat[size_t(row)][size_t(c)] * inv % pN);
        for (int r = 0; r < mb; ++r) {
            if (r == row) continue;
            std::int64_t fct = mat[size_t(r)][size_t(col)];
            if (fct == 0) continue;
            for (int c = 0; c <= ms; ++c) {
                __int128 val = (__int128)mat[size_t(r)][size_t(c)] - (__int128)fct * mat[size_t(row)][size_t(c)] % pN;
                val %= pN;
                if (val < 0) val += pN;
                mat[size_t(r)][size_t(c)] = std::int64_t(val);
            }
        }
        pivc[size_t(row)] = col;
        ++row;
    }
    std::vector<std::int64_t> sol(size_t(ms), 0);
    for (int r = 0; r < row; ++r) sol[size_t(pivc[size_t(r)])] = mat[size_t(r)][size_t(ms)];
    for (int r = row; r < mb; ++r)
        if (mat[size_t(r)][size_t(ms)] != 0)
            throw SwtError("witt_restrict: element not in the subring");
    WittElem out(small, sol);
    if (!(witt_embed(out, big) == w)) throw SwtError("witt_restrict: verification failed");
    return out;
}

LocalElem norm_unramified(const LocalElem &x, const TowerPtr &small_tower) {
    const TowerPtr &big = x.tower();
    if (big->g % small_tower->g != 0 || big->f != small_tower->f || big->e != small_tower->e)
        throw SwtError("norm_unramified: incompatible towers");
    int steps = big->g / small_tower->g;
    LocalElem acc = LocalElem::one(big);
    for (int j = 0; j < steps; ++j)
        acc = acc * galois_apply(GalElem{j * small_tower->g, 0}, x);
    std::vector<WittElem> c;
    c.reserve(size_t(small_tower->e));
    for (int j = 0; j < small_tower->e; ++j)
        c.push_back(witt_restrict(acc.coords()[size_t(j)], small_tower->W));
    return LocalElem(small_tower, std::move(c));
}

} // namespace swt
