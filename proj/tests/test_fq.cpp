#include "doctest.h"

#include <random>

#include "serrewt/fq.hpp"

using namespace swt;

namespace {

FqConfigPtr f9() { return field_create(3, 2); }

FqElem alpha(const FqConfigPtr &cfg) { return FqElem(cfg, {0, 1}); }

} // namespace

TEST_CASE("field creation and moduli") {
    auto cfg = f9();
    CHECK(cfg->q == 9);
    // default modulus is x^2 - x - 1, so alpha^2 = alpha + 1
    FqElem a = alpha(cfg);
    CHECK(a * a == a + FqElem::one(cfg));

    CHECK_THROWS_AS(field_create(4, 1), NotPrime);
    // x^2 + 1 is irreducible mod 3
    CHECK_NOTHROW(field_create(3, 2, std::vector<std::int64_t>{1, 0, 1}));
    // x^2 - 1 is not
    CHECK_THROWS_AS(field_create(3, 2, std::vector<std::int64_t>{-1, 0, 1}), ReducibleModulus);

    CHECK(field_create(3, 1)->q == 3);
}

TEST_CASE("frobenius, trace, squares, dlog on F_9") {
    auto cfg = f9();
    FqElem a = alpha(cfg);

    // alpha^3 = alpha * alpha^2 = alpha^2 + alpha = 2 alpha + 1
    CHECK(frobenius(a) == FqElem(cfg, {1, 2}));
    CHECK(frobenius(a, 2) == a);
    for (std::int64_t c = 0; c < 3; ++c)
        CHECK(frobenius(FqElem::from_int(cfg, c)) == FqElem::from_int(cfg, c));

    CHECK(trace_to_prime(a) == FqElem::one(cfg));
    CHECK(trace_to_prime(FqElem::one(cfg)) == FqElem::from_int(cfg, 2));
    CHECK(trace_to_prime(FqElem::zero(cfg)).is_zero());

    // alpha generates the order-8 group
    CHECK(mult_order(a) == 8);
    CHECK(canonical_generator(cfg) == a);
    CHECK_FALSE(is_square(a.pow(7)));
    CHECK(is_square(FqElem::one(cfg)));
    CHECK(is_square(FqElem::from_int(cfg, 2))); // 2 = alpha^4
    CHECK(a.pow(4) == FqElem::from_int(cfg, 2));

    CHECK(dlog(FqElem::one(cfg), a) == 0);
    CHECK(dlog(FqElem::from_int(cfg, 2), a) == 4);
    CHECK(dlog(FqElem(cfg, {1, 2}), a) == 3);
    CHECK_THROWS_AS(dlog(FqElem::zero(cfg), a), ZeroInput);
    CHECK_THROWS_AS(dlog(a, FqElem::from_int(cfg, 2)), NotGenerator);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(12345);
    for (auto [p, m] : {std::pair<std::int64_t, int>{3, 2}, {2, 3}, {5, 2}, {3, 4}}) {
        auto cfg = field_create(p, m);
        std::uniform_int_distribution<std::int64_t> dist(0, cfg->q - 1);
        for (int it = 0; it < 200; ++it) {
            FqElem x = FqElem::from_index(cfg, dist(rng));
            FqElem y = FqElem::from_index(cfg, dist(rng));
            FqElem z = FqElem::from_index(cfg, dist(rng));
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * x.inverse() == FqElem::one(cfg));
            CHECK(frobenius(x * y) == frobenius(x) * frobenius(y));
            CHECK(frobenius(x + y) == frobenius(x) + frobenius(y));
            CHECK(trace_to_prime(frobenius(x)) == trace_to_prime(x));
            CHECK(frobenius(x, m) == x);
        }
    }
}

TEST_CASE("square counting is exact for small fields") {
    for (auto [p, m] : {std::pair<std::int64_t, int>{3, 2}, {3, 4}, {5, 2}, {7, 1}}) {
        auto cfg = field_create(p, m);
        if (cfg->q > 81) continue;
        std::int64_t squares = 0;
        for (std::int64_t i = 1; i < cfg->q; ++i)
            if (is_square(FqElem::from_index(cfg, i))) ++squares;
        CHECK(squares == (cfg->q - 1) / 2);
    }
}

TEST_CASE("embeddings are homomorphisms") {
    auto k = f9();
    auto l = field_create(3, 4);
    FqElem a = alpha(k);
    FqElem ea = embed(a, l);
    CHECK(ea * ea == ea + FqElem::one(l)); // satisfies x^2 = x + 1
    for (std::int64_t i = 0; i < 9; ++i)
        for (std::int64_t j = 0; j < 9; ++j) {
            FqElem x = FqElem::from_index(k, i), y = FqElem::from_index(k, j);
            CHECK(embed(x * y, l) == embed(x, l) * embed(y, l));
            CHECK(embed(x + y, l) == embed(x, l) + embed(y, l));
        }
    // relative trace from F_81 to F_9 lands in the embedded copy
    FqElem t = trace_to_subdegree(canonical_generator(l), 2);
    CHECK(frobenius(t, 2) == t);
}

TEST_CASE("power string round trip") {
    auto cfg = f9();
    for (std::int64_t i = 0; i < 9; ++i) {
        FqElem x = FqElem::from_index(cfg, i);
        CHECK(parse_power_string(cfg, to_power_string(x)) == x);
    }
    CHECK(parse_power_string(cfg, "a^3") == frobenius(alpha(cfg)));
    CHECK(parse_power_string(cfg, "-a") == -alpha(cfg));
}
