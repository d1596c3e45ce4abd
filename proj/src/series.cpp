#include "serrewt/series.hpp"

namespace swt {

TruncSeries::TruncSeries(WittRingPtr ring, int M) : ring_(std::move(ring)), M_(M) {
    c_.assign(size_t(M_), WittElem::zero(ring_));
}

TruncSeries::TruncSeries(WittRingPtr ring, int M, std::vector<WittElem> coeffs)
    : ring_(std::move(ring)), M_(M), c_(std::move(coeffs)) {
    c_.resize(size_t(M_), WittElem::zero(ring_));
}

TruncSeries TruncSeries::one(const WittRingPtr &r, int M) {
    TruncSeries s(r, M);
    s.c_[0] = WittElem::one(r);
    return s;
}

TruncSeries operator+(const TruncSeries &a, const TruncSeries &b) {
    TruncSeries r(a.ring_, std::min(a.M_, b.M_));
    for (int k = 0; k < r.M_; ++k) r.c_[size_t(k)] = a.c_[size_t(k)] + b.c_[size_t(k)];
    return r;
}

TruncSeries operator-(const TruncSeries &a, const TruncSeries &b) {
    TruncSeries r(a.ring_, std::min(a.M_, b.M_));
    for (int k = 0; k < r.M_; ++k) r.c_[size_t(k)] = a.c_[size_t(k)] - b.c_[size_t(k)];
    return r;
}

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) {
    TruncSeries r(a.ring_, std::min(a.M_, b.M_));
    for (int i = 0; i < r.M_; ++i) {
        if (a.c_[size_t(i)].is_zero()) continue;
        for (int j = 0; i + j < r.M_; ++j) {
            if (b.c_[size_t(j)].is_zero()) continue;
            r.c_[size_t(i + j)] = r.c_[size_t(i + j)] + a.c_[size_t(i)] * b.c_[size_t(j)];
        }
    }
    return r;
}

bool operator==(const TruncSeries &a, const TruncSeries &b) {
    if (a.M_ != b.M_) return false;
    for (int k = 0; k < a.M_; ++k)
        if (!(a.c_[size_t(k)] == b.c_[size_t(k)])) return false;
    return true;
}

TruncSeries TruncSeries::inverse() const {
    if (!c_[0].is_unit()) throw SwtError("series inverse: constant term not a unit");
    TruncSeries r(ring_, M_);
    WittElem inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int k = 1; k < M_; ++k) {
        WittElem acc = WittElem::zero(ring_);
        for (int j = 1; j <= k; ++j) acc = acc + c_[size_t(j)] * r.c_[size_t(k - j)];
        r.c_[size_t(k)] = -(inv0 * acc);
    }
    return r;
}

TruncSeries TruncSeries::pow(std::int64_t k) const {
    TruncSeries r = one(ring_, M_), base = *this;
    bool neg = k < 0;
    if (neg) k = -k;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return neg ? r.inverse() : r;
}

TruncSeries TruncSeries::scale_power(const WittElem &s, int k) const {
    TruncSeries r(ring_, M_);
    WittElem sp = WittElem::one(ring_);
    for (int j = 0; j * k < M_; ++j) {
        r.c_[size_t(j * k)] = r.c_[size_t(j * k)] + c_[size_t(j)] * sp;
        sp = sp * s;
        if (size_t(j + 1) >= c_.size()) break;
    }
    return r;
}

bool TruncSeries::congruent(const TruncSeries &b, int n) const {
    return first_difference(b, n) == -1;
}

int TruncSeries::first_difference(const TruncSeries &b, int n) const {
    int M = std::min(M_, b.M_);
    for (int k = 0; k < M; ++k)
        if (!c_[size_t(k)].congruent(b.c_[size_t(k)], n)) return k;
    return -1;
}

std::vector<BigRat> artin_hasse_rational(std::int64_t p, int M) {
    // E' = A' E with A = sum x^(p^n)/p^n gives k e_k = sum_{p^n <= k} e_{k-p^n}.
    std::vector<BigRat> e(size_t(M), BigRat(0));
    if (M == 0) return e;
    e[0] = 1;
    for (int k = 1; k < M; ++k) {
        BigRat acc = 0;
        for (std::int64_t pn = 1; pn <= k; pn *= p)
            acc += e[size_t(k - pn)];
        e[size_t(k)] = acc / k;
    }
    for (const auto &r : e) {
        BigInt den = boost::multiprecision::denominator(r);
        if (den % p == 0)
            throw PrecisionLoss("Artin-Hasse coefficient with p in the denominator");
    }
    return e;
}

std::int64_t rat_mod_pn(const BigRat &r, std::int64_t p, std::int64_t pN) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den % p == 0) throw PrecisionLoss("denominator divisible by p");
    BigInt n = num % pN;
    if (n < 0) n += pN;
    BigInt d = den % pN;
    // modular inverse of d mod p^N by Newton from inverse mod p
    std::int64_t dv = std::int64_t(d);
    std::int64_t inv = 1;
    {
        std::int64_t d0 = dv % p;
        for (std::int64_t t = 1; t < p; ++t)
            if ((d0 * t) % p == 1) { inv = t; break; }
        // lift
        __int128 x = inv;
        for (int it = 0; it < 8; ++it) {
            x = x * (2 - (__int128)dv * x % pN) % pN;
            if (x < 0) x += pN;
        }
        inv = std::int64_t(x);
    }
    return std::int64_t((__int128)std::int64_t(n) * inv % pN);
}

TruncSeries artin_hasse(const WittRingPtr &ring, int M) {
    auto rats = artin_hasse_rational(ring->residue->p, M);
    TruncSeries s(ring, M);
    for (int k = 0; k < M; ++k)
        s.set_coeff(k, WittElem::from_int(ring, rat_mod_pn(rats[size_t(k)], ring->residue->p, ring->pN)));
    return s;
}

TruncSeries exp_term(const WittElem &c, int k, int M) {
    const WittRingPtr &ring = c.ring();
    if (c.val_p() < 1) throw SwtError("exp_term: argument must be divisible by p");
    TruncSeries s(ring, M);
    s.set_coeff(0, WittElem::one(ring));
    WittElem cj = WittElem::one(ring);
    BigInt fact = 1;
    const std::int64_t p = ring->residue->p;
    for (int j = 1; j * k < M; ++j) {
        cj = cj * c;
        fact *= j;
        // divide c^j by j! : strip p-powers (exact in W since v_p(c^j) >= j > v_p(j!)),
        // invert the unit part mod p^N
        BigInt f = fact;
        int vp = 0;
        while (f % p == 0) { f /= p; ++vp; }
        WittElem t = cj.divide_exact_p(vp);
        BigInt fm = f % ring->pN;
        std::int64_t unit = std::int64_t(fm);
        WittElem uinv = WittElem::from_int(ring, unit).inverse();
        s.set_coeff(j * k, t * uinv);
    }
    return s;
}

} // namespace swt
