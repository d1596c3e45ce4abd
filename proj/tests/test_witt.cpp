#include "doctest.h"

#include "serrewt/series.hpp"

using namespace swt;

namespace {

// Independent oracle for the Artin-Hasse coefficients: the Moebius product
// E_p(x) = prod_{p \nmid n} (1 - x^n)^(-mu(n)/n).
std::vector<BigRat> ah_by_moebius(std::int64_t p, int M) {
    auto mu = [](int n) {
        int m = 1;
        for (int d = 2; d * d <= n; ++d) {
            if (n % d) continue;
            n /= d;
            if (n % d == 0) return 0;
            m = -m;
        }
        if (n > 1) m = -m;
        return m;
    };
    std::vector<BigRat> r(size_t(M), 0);
    r[0] = 1;
    for (int n = 1; n < M; ++n) {
        if (n % int(p) == 0 || mu(n) == 0) continue;
        BigRat expo = BigRat(-mu(n), n);
        // (1 - x^n)^expo = sum_k binom(expo, k) (-1)^k x^(nk)
        std::vector<BigRat> f(size_t(M), 0);
        f[0] = 1;
        BigRat binom = 1;
        for (int k = 1; std::int64_t(k) * n < M; ++k) {
            binom = binom * (expo - (k - 1)) / k;
            f[size_t(k * n)] = binom * ((k % 2) ? -1 : 1);
        }
        std::vector<BigRat> out(size_t(M), 0);
        for (int i = 0; i < M; ++i) {
            if (r[size_t(i)] == 0) continue;
            for (int j = 0; i + j < M; ++j)
                if (!(f[size_t(j)] == 0)) out[size_t(i + j)] += r[size_t(i)] * f[size_t(j)];
        }
        r = std::move(out);
    }
    return r;
}

} // namespace

TEST_CASE("teichmuller lifts") {
    auto k = field_create(3, 2);
    auto W = witt_ring(k, 4);
    CHECK(teichmuller(FqElem::zero(k), W).is_zero());
    CHECK(teichmuller(FqElem::one(k), W) == WittElem::one(W));
    // [2] = -1 = 3^N - 1
    CHECK(teichmuller(FqElem::from_int(k, 2), W) == -WittElem::one(W));
    FqElem a = FqElem(k, {0, 1});
    WittElem ta = teichmuller(a, W);
    CHECK(ta.pow(9) == ta);
    CHECK(ta.pow(8) == WittElem::one(W));
    CHECK(ta.residue_elem() == a);
    // multiplicativity over the whole field
    for (std::int64_t i = 0; i < 9; ++i)
        for (std::int64_t j = 0; j < 9; ++j) {
            FqElem x = FqElem::from_index(k, i), y = FqElem::from_index(k, j);
            CHECK(teichmuller(x, W) * teichmuller(y, W) == teichmuller(x * y, W));
        }
}

TEST_CASE("frobenius on the witt ring") {
    auto k = field_create(3, 2);
    auto W = witt_ring(k, 5);
    // ring automorphism reducing to x -> x^p
    for (std::int64_t i = 0; i < 9; ++i) {
        WittElem w(W, {i % 9, (i * 7 + 2) % 81});
        CHECK(w.frobenius().residue_elem() == frobenius(w.residue_elem()));
        CHECK(w.frobenius(2) == w);
    }
    WittElem x(W, {5, 17}), y(W, {40, 3});
    CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
    CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
}

TEST_CASE("artin-hasse coefficients, two independent routes") {
    // p = 3 leading values: 1, 1, 1/2, 1/2
    auto rats = artin_hasse_rational(3, 16);
    CHECK(rats[0] == 1);
    CHECK(rats[1] == 1);
    CHECK(rats[2] == BigRat(1, 2));
    CHECK(rats[3] == BigRat(1, 2));
    // 1/2 = 5 mod 9
    CHECK(rat_mod_pn(rats[2], 3, 9) == 5);
    CHECK(rat_mod_pn(rats[3], 3, 9) == 5);

    for (std::int64_t p : {2, 3, 5}) {
        auto a = artin_hasse_rational(p, 20);
        auto b = ah_by_moebius(p, 20);
        for (int i = 0; i < 20; ++i) CHECK(a[size_t(i)] == b[size_t(i)]);
    }
}

TEST_CASE("E(x)^p = E(x^p) exp(px) as truncated series") {
    const std::int64_t p = 3;
    const int N = 3, M = 12;
    auto k = field_create(p, 1);
    // extra digits absorb the factorial divisions in exp(px)
    auto W = witt_ring(k, N + 6);
    TruncSeries E = artin_hasse(W, M);
    TruncSeries lhs = E.pow(p);
    TruncSeries Exp = E.scale_power(WittElem::one(W), int(p));
    TruncSeries expo = exp_term(WittElem::from_int(W, p), 1, M);
    CHECK(lhs.congruent(Exp * expo, N));
}

TEST_CASE("series basics") {
    auto k = field_create(3, 1);
    auto W = witt_ring(k, 4);
    TruncSeries E = artin_hasse(W, 10);
    CHECK(E.coeff(0) == WittElem::one(W));
    CHECK(E.coeff(1) == WittElem::one(W));
    TruncSeries inv = E.inverse();
    CHECK((E * inv) == TruncSeries::one(W, 10));
}
