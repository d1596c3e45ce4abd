#include "serrewt/witt.hpp"

#include <algorithm>

namespace swt {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t mod) {
    return std::int64_t((__int128)a * b % mod);
}

std::int64_t modn(std::int64_t x, std::int64_t n) {
    x %= n;
    return x < 0 ? x + n : x;
}

using Vec = std::vector<std::int64_t>;

// polynomial helpers mod (p^N, modulus); lowest degree first
Vec poly_mul_mod(const Vec &a, const Vec &b, const Vec &modulus, std::int64_t pN) {
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = modn(r[i + j] + mulmod(a[i], b[j], pN), pN);
    }
    const int dm = int(modulus.size()) - 1;
    while (int(r.size()) - 1 >= dm && int(r.size()) > 1) {
        std::int64_t lead = r.back();
        int shift = int(r.size()) - 1 - dm;
        if (lead != 0)
            for (int i = 0; i <= dm; ++i)
                r[size_t(shift + i)] = modn(r[size_t(shift + i)] - mulmod(lead, modulus[size_t(i)], pN), pN);
        r.pop_back();
    }
    return r;
}

Vec poly_pow_mod(Vec base, std::int64_t k, const Vec &modulus, std::int64_t pN) {
    Vec r{1};
    while (k > 0) {
        if (k & 1) r = poly_mul_mod(r, base, modulus, pN);
        base = poly_mul_mod(base, base, modulus, pN);
        k >>= 1;
    }
    return r;
}

Vec resize_to(Vec v, size_t n) {
    v.resize(n, 0);
    return v;
}

// Characteristic polynomial of an n x n matrix over Z/pN via Berkowitz
// (division free).  Returns coefficients of det(xI - A), highest first
// normalized so coeff[0] = 1.
std::vector<std::int64_t> berkowitz_charpoly_int(const std::vector<Vec> &A, std::int64_t pN) {
    const size_t n = A.size();
    std::vector<std::int64_t> poly{1};
    for (size_t i = 1; i <= n; ++i) {
        // q_0 = 1, q_1 = -A[i-1][i-1], q_j = -(R * M^(j-2) * C) for j >= 2
        std::vector<std::int64_t> q(i + 1, 0);
        q[0] = 1;
        q[1] = modn(-A[i - 1][i - 1], pN);
        if (i >= 2) {
            Vec Cv(i - 1), Rv(i - 1);
            for (size_t r = 0; r + 1 < i; ++r) Cv[r] = A[r][i - 1];
            for (size_t c = 0; c + 1 < i; ++c) Rv[c] = A[i - 1][c];
            Vec cur = Cv;
            for (size_t j = 2; j <= i; ++j) {
                std::int64_t dot = 0;
                for (size_t k = 0; k + 1 < i; ++k) dot = modn(dot + mulmod(Rv[k], cur[k], pN), pN);
                q[j] = modn(-dot, pN);
                if (j < i) {
                    Vec nxt(i - 1, 0);
                    for (size_t r = 0; r + 1 < i; ++r) {
                        std::int64_t s = 0;
                        for (size_t k = 0; k + 1 < i; ++k) s = modn(s + mulmod(A[r][k], cur[k], pN), pN);
                        nxt[r] = s;
                    }
                    cur = std::move(nxt);
                }
            }
        }
        std::vector<std::int64_t> np(i + 1, 0);
        for (size_t s = 0; s < i + 1; ++s) {
            std::int64_t acc = 0;
            for (size_t j = 0; j <= s && j < q.size(); ++j)
                if (s - j < poly.size()) acc = modn(acc + mulmod(q[j], poly[s - j], pN), pN);
            np[s] = acc;
        }
        poly = std::move(np);
    }
    return poly;
}

} // namespace

WittRingPtr witt_ring(const FqConfigPtr &residue, int N) {
    if (N < 1) throw SwtError("witt_ring: N >= 1 required");
    auto r = std::make_shared<WittRing>();
    r->residue = residue;
    r->N = N;
    r->pN = 1;
    for (int i = 0; i < N; ++i) {
        if (r->pN > (std::int64_t(1) << 55) / residue->p)
            throw SwtError("witt_ring: precision too large for int64 backend");
        r->pN *= residue->p;
    }
    const int m = residue->m;
    const std::int64_t pN = r->pN;

    // naive lift of the residue modulus
    Vec naive(residue->modulus.begin(), residue->modulus.end());

    if (m == 1) {
        r->modulus = naive;
        r->frob_mat = {{1}};
        auto ring = WittRingPtr(r);
        return ring;
    }

    // Teichmueller class of x in (Z/p^N)[x]/(naive): iterate z -> z^(p^m)
    Vec z{0, 1};
    std::int64_t q = residue->q;
    for (int it = 0; it < N + 2; ++it) {
        Vec z2 = poly_pow_mod(z, q, naive, pN);
        z2 = resize_to(std::move(z2), size_t(m));
        if (z2 == resize_to(z, size_t(m))) { z = z2; break; }
        z = z2;
    }
    z = resize_to(std::move(z), size_t(m));

    // m* = charpoly of multiplication by z (coefficients automatically in Z/p^N)
    std::vector<Vec> mult(size_t(m), Vec(size_t(m), 0));
    for (int j = 0; j < m; ++j) {
        Vec ej(size_t(j + 1), 0);
        ej[size_t(j)] = 1;
        Vec col = poly_mul_mod(z, ej, naive, pN);
        col = resize_to(std::move(col), size_t(m));
        for (int i = 0; i < m; ++i) mult[size_t(i)][size_t(j)] = col[size_t(i)];
    }
    std::vector<std::int64_t> cp = berkowitz_charpoly_int(mult, pN); // highest first
    Vec mstar(size_t(m + 1), 0);
    for (int i = 0; i <= m; ++i) mstar[size_t(i)] = modn(cp[size_t(m - i)], pN);
    // sanity: reduces to the residue modulus mod p
    for (int i = 0; i <= m; ++i)
        if (modn(mstar[size_t(i)], residue->p) != residue->modulus[size_t(i)])
            throw SwtError("witt_ring: canonical modulus does not lift the residue modulus");
    r->modulus = mstar;

    // Frobenius: s -> s^p (s is Teichmueller in the new presentation)
    r->frob_mat.assign(size_t(m), Vec(size_t(m), 0));
    Vec sp = poly_pow_mod(Vec{0, 1}, residue->p, mstar, pN);
    sp = resize_to(std::move(sp), size_t(m));
    Vec power{1};
    for (int j = 0; j < m; ++j) {
        Vec pj = resize_to(power, size_t(m));
        for (int i = 0; i < m; ++i) r->frob_mat[size_t(i)][size_t(j)] = pj[size_t(i)];
        power = poly_mul_mod(power, sp, mstar, pN);
    }
    return WittRingPtr(r);
}

std::vector<std::int64_t> WittElem::reduced(std::vector<std::int64_t> v) const {
    for (auto &x : v) x = modn(x, ring_->pN);
    if (int(v.size()) > ring_->residue->m) {
        // reduce by modulus
        const Vec &mod = ring_->modulus;
        const int dm = int(mod.size()) - 1;
        while (int(v.size()) - 1 >= dm && int(v.size()) > dm) {
            std::int64_t lead = v.back();
            int shift = int(v.size()) - 1 - dm;
            if (lead != 0)
                for (int i = 0; i <= dm; ++i)
                    v[size_t(shift + i)] = modn(v[size_t(shift + i)] - mulmod(lead, mod[size_t(i)], ring_->pN), ring_->pN);
            v.pop_back();
        }
    }
    v.resize(size_t(ring_->residue->m), 0);
    return v;
}

WittElem::WittElem(WittRingPtr ring, std::vector<std::int64_t> coeffs) : ring_(std::move(ring)) {
    c_ = reduced(std::move(coeffs));
}

WittElem WittElem::zero(const WittRingPtr &r) { return WittElem(r, {}); }
WittElem WittElem::one(const WittRingPtr &r) { return WittElem(r, {1}); }
WittElem WittElem::from_int(const WittRingPtr &r, std::int64_t n) { return WittElem(r, {modn(n, r->pN)}); }

bool WittElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

bool WittElem::is_unit() const { return val_p() == 0; }

int WittElem::val_p() const {
    int best = ring_->N;
    for (std::int64_t c : c_) {
        if (c == 0) continue;
        int v = 0;
        while (c % ring_->residue->p == 0) { c /= ring_->residue->p; ++v; }
        best = std::min(best, v);
    }
    return best;
}

static void check_same_ring(const WittElem &a, const WittElem &b) {
    if (!a.ring() || !b.ring() || !(*a.ring() == *b.ring()))
        throw SwtError("witt ring mismatch");
}

WittElem operator+(const WittElem &a, const WittElem &b) {
    check_same_ring(a, b);
    Vec c = a.coeffs();
    for (size_t i = 0; i < c.size(); ++i) c[i] = modn(c[i] + b.coeffs()[i], a.ring()->pN);
    return WittElem(a.ring(), std::move(c));
}

WittElem operator-(const WittElem &a, const WittElem &b) {
    check_same_ring(a, b);
    Vec c = a.coeffs();
    for (size_t i = 0; i < c.size(); ++i) c[i] = modn(c[i] - b.coeffs()[i], a.ring()->pN);
    return WittElem(a.ring(), std::move(c));
}

WittElem WittElem::operator-() const {
    Vec c = c_;
    for (auto &v : c) v = modn(-v, ring_->pN);
    return WittElem(ring_, std::move(c));
}

WittElem operator*(const WittElem &a, const WittElem &b) {
    check_same_ring(a, b);
    Vec r = poly_mul_mod(a.coeffs(), b.coeffs(), a.ring()->modulus, a.ring()->pN);
    return WittElem(a.ring(), std::move(r));
}

bool operator==(const WittElem &a, const WittElem &b) {
    return a.ring() && b.ring() && *a.ring() == *b.ring() && a.coeffs() == b.coeffs();
}

WittElem WittElem::pow(std::int64_t k) const {
    if (k < 0) return inverse().pow(-k);
    WittElem r = one(ring_), base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

WittElem WittElem::inverse() const {
    if (!is_unit()) throw SwtError("inverse of non-unit Witt element");
    // Newton lift of the residue inverse
    FqElem rinv = residue_elem().inverse();
    WittElem z(ring_, Vec(rinv.coeffs().begin(), rinv.coeffs().end()));
    WittElem two = from_int(ring_, 2);
    for (int it = 0; it < ring_->N + 1; ++it)
        z = z * (two - *this * z);
    return z;
}

FqElem WittElem::residue_elem() const {
    Vec c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = modn(c_[i], ring_->residue->p);
    return FqElem(ring_->residue, std::move(c));
}

WittElem WittElem::frobenius(int k) const {
    const int m = ring_->residue->m;
    k = ((k % m) + m) % m;
    Vec cur = c_;
    for (int it = 0; it < k; ++it) {
        Vec nxt(size_t(m), 0);
        for (int i = 0; i < m; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < m; ++j)
                s = modn(s + mulmod(ring_->frob_mat[size_t(i)][size_t(j)], cur[size_t(j)], ring_->pN), ring_->pN);
            nxt[size_t(i)] = s;
        }
        cur = std::move(nxt);
    }
    return WittElem(ring_, std::move(cur));
}

WittElem WittElem::divide_exact_p(int k) const {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= ring_->residue->p;
    Vec c = c_;
    for (auto &v : c) {
        if (v % pk != 0) throw InexactDivision("Witt coefficient not divisible by p^" + std::to_string(k));
        v /= pk;
    }
    return WittElem(ring_, std::move(c));
}

WittElem WittElem::times_p(int k) const {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= ring_->residue->p;
    Vec c = c_;
    for (auto &v : c) v = mulmod(v, pk, ring_->pN);
    return WittElem(ring_, std::move(c));
}

bool WittElem::congruent(const WittElem &b, int n) const {
    check_same_ring(*this, b);
    std::int64_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= ring_->residue->p;
    for (size_t i = 0; i < c_.size(); ++i)
        if (modn(c_[i] - b.coeffs()[i], pn) != 0) return false;
    return true;
}

WittElem teichmuller(const FqElem &a, const WittRingPtr &ring) {
    if (!(*a.config() == *ring->residue)) throw SwtError("teichmuller: residue field mismatch");
    WittElem w(ring, Vec(a.coeffs().begin(), a.coeffs().end()));
    for (int it = 0; it < ring->N + 2; ++it) {
        WittElem w2 = w.pow(ring->residue->q);
        if (w2 == w) break;
        w = w2;
    }
    return w;
}

WittElem hensel_root(const WittRingPtr &ring, const std::vector<WittElem> &f, const FqElem &residue_root) {
    auto eval = [&](const WittElem &x, bool deriv) {
        WittElem acc = WittElem::zero(ring);
        WittElem xp = WittElem::one(ring);
        for (size_t i = deriv ? 1 : 0; i < f.size(); ++i) {
            WittElem term = f[i];
            if (deriv) term = term * WittElem::from_int(ring, std::int64_t(i));
            acc = acc + term * xp;
            xp = xp * x;
        }
        return acc;
    };
    WittElem x(ring, Vec(residue_root.coeffs().begin(), residue_root.coeffs().end()));
    // f'(x) must be a unit for a simple Hensel lift
    for (int it = 0; it < ring->N + 2; ++it) {
        WittElem fx = [&] {
            WittElem acc = WittElem::zero(ring);
            WittElem xp = WittElem::one(ring);
            for (size_t i = 0; i < f.size(); ++i) {
                acc = acc + f[i] * xp;
                xp = xp * x;
            }
            return acc;
        }();
        if (fx.is_zero()) return x;
        WittElem fpx = eval(x, true);
        if (!fpx.is_unit()) throw SwtError("hensel_root: derivative not a unit");
        x = x - fx * fpx.inverse();
    }
    return x;
}

} // namespace swt
