#include "serrewt/ahlemmas.hpp"

#include <sstream>

namespace swt {

std::vector<WittElem> ah_delta_sequence(const FqElem &a, const FqElem &b,
                                        const WittRingPtr &ring, int n_max) {
    WittElem ta = teichmuller(a, ring);
    WittElem tb = teichmuller(b, ring);
    WittElem tab = teichmuller(a + b, ring);
    std::vector<WittElem> delta;
    delta.push_back((ta + tb - tab).divide_exact_p(1));
    for (int n = 1; n <= n_max; ++n) {
        WittElem acc = delta[0].frobenius(n);
        for (int i = 0; i < n; ++i) {
            std::int64_t e = 1;
            for (int j = 0; j < n - i; ++j) e *= ring->residue->p;
            acc = acc - delta[size_t(i)].pow(e).times_p(i);
        }
        delta.push_back(acc.divide_exact_p(n));
    }
    return delta;
}

namespace {

int floor_log(std::int64_t p, int M) {
    int n = 0;
    std::int64_t pn = p;
    while (pn < M) { pn *= p; ++n; }
    return n; // largest n with p^n < M
}

} // namespace

VerificationWitness verify_ah_multiplicativity(const FqElem &a, const FqElem &b, int N, int M) {
    const std::int64_t p = a.config()->p;
    const int n_max = floor_log(p, M);
    const int N_int = N + n_max + 1;
    WittRingPtr ring = witt_ring(a.config(), N_int);

    auto deltas = ah_delta_sequence(a, b, ring, n_max);
    TruncSeries E = artin_hasse(ring, M);

    TruncSeries f = TruncSeries::one(ring, M);
    std::int64_t pi = 1;
    for (int i = 0; i <= n_max && pi < M; ++i, pi *= p)
        f = f * E.scale_power(deltas[size_t(i)], int(pi));

    TruncSeries lhs = f.pow(p) * E.scale_power(teichmuller(a + b, ring), 1);
    TruncSeries rhs = E.scale_power(teichmuller(a, ring), 1) * E.scale_power(teichmuller(b, ring), 1);

    VerificationWitness w;
    w.witness_coeffs.reserve(size_t(M));
    for (int k = 0; k < M; ++k) w.witness_coeffs.push_back(f.coeff(k));
    int d = lhs.first_difference(rhs, N);
    w.pass = (d == -1);
    w.fail_degree = d;
    if (!w.pass) {
        std::ostringstream os;
        os << "multiplicativity identity fails at x^" << d << " for a=" << a.str() << " b=" << b.str();
        w.detail = os.str();
    }
    return w;
}

VerificationWitness verify_ah_scaling(const FqElem &delta_res, int N, int M) {
    const std::int64_t p = delta_res.config()->p;
    // headroom: one /p for c_n plus factorial divisions inside exp
    int fact_loss = 0;
    {
        BigInt f = 1;
        for (int j = 2; j < M; ++j) f *= j;
        while (f % p == 0) { f /= p; ++fact_loss; }
    }
    const int N_int = N + 1 + fact_loss + 1;
    WittRingPtr ring = witt_ring(delta_res.config(), N_int);
    const WittElem d = teichmuller(delta_res, ring);
    TruncSeries E = artin_hasse(ring, M);

    // lhs = E(x) E((1+pd)x)^{-1} prod_{p^m < M} E(p d x^(p^m))
    WittElem one = WittElem::one(ring);
    WittElem opd = one + d.times_p(1);
    TruncSeries lhs = E * E.scale_power(opd, 1).inverse();
    std::int64_t pm = 1;
    for (int m = 0; pm < M; ++m, pm *= p)
        lhs = lhs * E.scale_power(d.times_p(1), int(pm));

    // witness: prod_n exp(c_n x^(p^n)), c_n = (b_n - a_n)/p
    TruncSeries wser = TruncSeries::one(ring, M);
    std::int64_t pn = 1;
    for (int n = 0; pn < M; ++n, pn *= p) {
        // a_n = sum_{i=1}^{p^n} binom(p^n, i) p^(i-n) d^i
        WittElem an = WittElem::zero(ring);
        BigInt binom = 1;
        for (std::int64_t i = 1; i <= pn; ++i) {
            binom = binom * (pn - i + 1) / i;
            // binom * p^(i-n): numerator valuation guarantees integrality
            BigInt num = binom;
            int shift = int(i) - n;
            if (shift >= 0) {
                for (int t = 0; t < shift; ++t) num *= p;
            } else {
                for (int t = 0; t < -shift; ++t) {
                    if (num % p != 0) throw InexactDivision("binomial term not p-integral");
                    num /= p;
                }
            }
            BigInt red = num % ring->pN;
            if (red < 0) red += ring->pN;
            an = an + d.pow(i) * WittElem::from_int(ring, std::int64_t(red));
        }
        // b_n = sum_{j=0}^n p^(p^j - j) d^(p^j)
        WittElem bn = WittElem::zero(ring);
        std::int64_t pj = 1;
        for (int j = 0; j <= n; ++j, pj *= p) {
            std::int64_t expo = pj - j;
            if (expo < N_int) bn = bn + d.pow(pj).times_p(int(expo));
        }
        WittElem cn = (bn - an).divide_exact_p(1);
        if (cn.val_p() < 1) throw InexactDivision("c_n not divisible by p");
        wser = wser * exp_term(cn, int(pn), M);
    }

    TruncSeries rhs = wser.pow(p);
    VerificationWitness w;
    for (int k = 0; k < M; ++k) w.witness_coeffs.push_back(wser.coeff(k));
    int dd = lhs.first_difference(rhs, N);
    w.pass = (dd == -1);
    w.fail_degree = dd;
    if (!w.pass) {
        std::ostringstream os;
        os << "scaling identity fails at x^" << dd << " for delta=" << delta_res.str();
        w.detail = os.str();
    }
    return w;
}

} // namespace swt
