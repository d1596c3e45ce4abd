#include "doctest.h"

#include <random>

#include "serrewt/normgroup.hpp"

using namespace swt;

namespace {

// multiplication of theta-polynomials mod g, for the multiplicativity check
std::vector<LocalElem> polmulmod(const std::vector<LocalElem> &a, const std::vector<LocalElem> &b,
                                 const WildExtension &ext) {
    const TowerPtr &t = ext.tower;
    std::vector<LocalElem> r(a.size() + b.size() - 1, LocalElem::zero(t));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    while (int(r.size()) > ext.D) {
        LocalElem top = r.back();
        r.pop_back();
        if (top.is_zero()) continue;
        size_t off = r.size() - size_t(ext.D);
        for (int i = 0; i < ext.D; ++i)
            r[off + size_t(i)] = r[off + size_t(i)] - top * ext.g[size_t(i)];
    }
    return r;
}

} // namespace

TEST_CASE("norm of scalars and of theta") {
    auto t = tower_create(3, 1, 1, 2, {-1}, 8); // pi^2 = -3
    LocalElem pi = LocalElem::pi_power(t, 1);
    // g = x^3 + pi x + pi (Eisenstein cubic)
    std::vector<LocalElem> g{pi, pi, LocalElem::zero(t), LocalElem::one(t)};
    auto ext = wild_extension(t, g);
    CHECK(ext.v_theta == 1);
    CHECK(ext.D == 3);

    LocalElem c = LocalElem::one(t) + pi.pow(2);
    CHECK(norm_element(ext, {c}) == c.pow(3));
    // norm(theta) = (-1)^D g(0)
    CHECK(norm_element(ext, {LocalElem::zero(t), LocalElem::one(t)}) == -g[0]);
    CHECK_THROWS_AS(norm_element(ext, {LocalElem::zero(t)}), ZeroElement);
}

TEST_CASE("norm multiplicativity on random pairs") {
    auto t = tower_create(3, 1, 1, 2, {-1}, 8);
    LocalElem pi = LocalElem::pi_power(t, 1);
    std::vector<LocalElem> g{pi, pi, LocalElem::zero(t), LocalElem::one(t)};
    auto ext = wild_extension(t, g);
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::int64_t> dist(0, t->W->pN - 1);
    auto rand_elem = [&] {
        return LocalElem::from_witt(t, WittElem(t->W, {dist(rng)}));
    };
    for (int it = 0; it < 10; ++it) {
        std::vector<LocalElem> h1{rand_elem(), rand_elem(), rand_elem()};
        std::vector<LocalElem> h2{rand_elem(), rand_elem(), rand_elem()};
        bool z1 = h1[0].is_zero() && h1[1].is_zero() && h1[2].is_zero();
        bool z2 = h2[0].is_zero() && h2[1].is_zero() && h2[2].is_zero();
        if (z1 || z2) continue;
        LocalElem lhs = norm_element(ext, polmulmod(h1, h2, ext));
        LocalElem rhs = norm_element(ext, h1) * norm_element(ext, h2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("linear extension gives the full digit space") {
    auto t = tower_create(3, 1, 1, 2, {-1}, 8);
    std::vector<LocalElem> g{-LocalElem::pi_power(t, 1), LocalElem::one(t)}; // x - pi
    auto ext = wild_extension(t, g);
    auto ns = norm_subgroup(ext);
    CHECK(ns.index == 1);
    CHECK(ns.rows.rank() == ns.basis.dim);
}

TEST_CASE("kummer cubic: index 3, stability, cubes contained") {
    auto t = tower_create(3, 1, 1, 2, {-1}, 8); // M = Q_3(sqrt(-3)) contains zeta_3
    LocalElem pi = LocalElem::pi_power(t, 1);
    // N = M(pi^(1/3))
    std::vector<LocalElem> g{-pi, LocalElem::zero(t), LocalElem::zero(t), LocalElem::one(t)};
    auto ext = wild_extension(t, g);
    auto ns = norm_subgroup(ext);
    CHECK(ns.index == 3);
    CHECK(galois_stable(ns));
    // p-th powers always land inside
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(0, t->W->pN - 1);
    for (int it = 0; it < 10; ++it) {
        LocalElem y = LocalElem::one(t) + pi * LocalElem::from_witt(t, WittElem(t->W, {dist(rng)}));
        CHECK(norm_contains(ns, y.pow(3)));
    }
    // pi itself is a norm (it is the Kummer generator)
    CHECK(norm_contains(ns, pi));
    // monotonicity under the generator bound
    auto ns_small = norm_subgroup(ext, 6);
    for (const auto &row : ns_small.rows.rows()) CHECK(ns.rows.contains(row));
}
