#include "doctest.h"

#include "serrewt/ahlemmas.hpp"

using namespace swt;

TEST_CASE("delta sequence small values") {
    auto k = field_create(3, 1);
    auto W = witt_ring(k, 6);
    FqElem one = FqElem::one(k);
    auto d = ah_delta_sequence(one, one, W, 3);
    // delta_0 = (1 + 1 - [2])/3 = (2 - (-1))/3 = 1
    CHECK(d[0] == WittElem::one(W));
    // delta_1 = (phi(delta_0) - delta_0^3)/3 = 0
    CHECK(d[1].is_zero());

    FqElem zero = FqElem::zero(k);
    auto dz = ah_delta_sequence(zero, one, W, 3);
    for (const auto &x : dz) CHECK(x.is_zero());
}

TEST_CASE("multiplicativity witness, spot checks") {
    auto k3 = field_create(3, 1);
    auto w = verify_ah_multiplicativity(FqElem::one(k3), FqElem::one(k3), 4, 20);
    CHECK(w.pass);

    auto z = verify_ah_multiplicativity(FqElem::zero(k3), FqElem::from_int(k3, 2), 4, 20);
    CHECK(z.pass);
    // witness is identically 1 when a = 0
    CHECK(z.witness_coeffs[0] == WittElem::one(z.witness_coeffs[0].ring()));
    for (size_t i = 1; i < z.witness_coeffs.size(); ++i) CHECK(z.witness_coeffs[i].is_zero());
}

TEST_CASE("multiplicativity sweep over F_9 at (N,M) = (3,15)") {
    auto k = field_create(3, 2);
    for (std::int64_t i = 0; i < 9; ++i)
        for (std::int64_t j = 0; j < 9; ++j) {
            auto w = verify_ah_multiplicativity(FqElem::from_index(k, i), FqElem::from_index(k, j), 3, 15);
            CHECK(w.pass);
        }
}

TEST_CASE("scaling witness") {
    auto k3 = field_create(3, 1);
    auto w0 = verify_ah_scaling(FqElem::zero(k3), 3, 20);
    CHECK(w0.pass);
    auto w1 = verify_ah_scaling(FqElem::one(k3), 3, 20);
    CHECK(w1.pass);
    auto k9 = field_create(3, 2);
    auto wa = verify_ah_scaling(FqElem(k9, {0, 1}), 3, 20);
    CHECK(wa.pass);
}
