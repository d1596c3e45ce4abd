#include "doctest.h"

#include <random>

#include "serrewt/cohomology.hpp"

using namespace swt;

namespace {

TameSignature sig(std::int64_t p, std::vector<int> a) {
    int f = int(a.size());
    return TameSignature(p, f, std::move(a));
}

} // namespace

TEST_CASE("basis levels for the worked cases") {
    // sig (1,2), e = 8: (n_0', n_1') = (5, 7), tau_i' = tau_{i+1}
    auto t8 = tower_create(3, 2, 1, 8, {1}, 6);
    auto bd = basis_data(char_from_signature(sig(3, {1, 2})), t8, t8->l_cfg);
    CHECK(bd.nprime == std::vector<int>{5, 7});
    CHECK(bd.tauprime == std::vector<int>{1, 0});

    // sig (1,3), e = 4: n_1' = 5, n_0' = n_1' - e = 1
    auto t4 = tower_create(3, 2, 1, 4, {1}, 8);
    auto bd3 = basis_data(char_from_signature(sig(3, {1, 3})), t4, t4->l_cfg);
    CHECK(bd3.nprime == std::vector<int>{1, 5});
    CHECK(bd3.tauprime == std::vector<int>{0, 0});

    // sig (1,1), e = 2: n_0' = n_1'
    auto t2 = tower_create(3, 2, 1, 2, {-1}, 6);
    auto bd2 = basis_data(char_from_signature(sig(3, {1, 1})), t2, t2->l_cfg);
    CHECK(bd2.nprime == std::vector<int>{1, 1});

    // a tower that does not kill chi
    CHECK_THROWS_AS(basis_data(char_from_signature(sig(3, {1, 2})), t4, t4->l_cfg), TowerTooSmall);
}

TEST_CASE("dual basis certifies the basis theorem") {
    // chi neither trivial nor cyclotomic: dim = f
    auto t8 = tower_create(3, 2, 1, 8, {1}, 6);
    auto bd = basis_data(char_from_signature(sig(3, {1, 2})), t8, t8->l_cfg);
    auto duals = dual_basis_functionals(bd);
    CHECK(duals.size() == 2);

    // cyclotomic chi: f + 1
    auto t2 = tower_create(3, 2, 1, 2, {-1}, 6);
    auto bd2 = basis_data(char_from_signature(sig(3, {1, 1})), t2, t2->l_cfg);
    CHECK(dual_basis_functionals(bd2).size() == 3);

    // trivial chi: f + 1 (u_triv enters)
    auto bd0 = basis_data(char_from_signature(sig(3, {2, 2})), t8, t8->l_cfg);
    CHECK(dual_basis_functionals(bd0).size() == 3);
}

TEST_CASE("duals pair correctly with the basis units") {
    auto t8 = tower_create(3, 2, 1, 8, {1}, 6);
    auto bd = basis_data(char_from_signature(sig(3, {1, 2})), t8, t8->l_cfg);
    auto duals = dual_basis_functionals(bd);
    for (int j = 0; j < 2; ++j) {
        auto cv = class_from_functional(bd, duals[size_t(j)]);
        for (int i = 0; i < 2; ++i)
            CHECK(cv.tau[size_t(i)].is_zero() == (i != j));
    }
}

TEST_CASE("evaluate_dual values and orthogonality") {
    auto t8 = tower_create(3, 2, 1, 8, {1}, 6);
    auto bd = basis_data(char_from_signature(sig(3, {1, 2})), t8, t8->l_cfg);
    auto l = t8->l_cfg;
    FqElem a = FqElem(l, {0, 1});
    CHECK(evaluate_dual(bd, 0, FqElem::zero(l), 5).is_zero());
    // l = k, trivial Galois group: single-term sum tau~_i(a^3)
    CHECK(evaluate_dual(bd, 0, a, 5) == frobenius(a, 1));
    CHECK(evaluate_dual(bd, 1, a, 7) == frobenius(a, 2));
    // orthogonality across levels
    CHECK(evaluate_dual(bd, 1, a, 5).is_zero());
    CHECK(evaluate_dual(bd, 0, a, 7).is_zero());
    CHECK_THROWS_AS(evaluate_dual(bd, 0, a, 3), LevelMismatch);
    // not identically zero
    bool nonzero = false;
    for (std::int64_t i = 1; i < l->q; ++i)
        if (!evaluate_dual(bd, 0, FqElem::from_index(l, i), 5).is_zero()) nonzero = true;
    CHECK(nonzero);
}

TEST_CASE("solved functionals are Galois-linear") {
    auto t8 = tower_create(3, 2, 1, 8, {1}, 6);
    auto bd = basis_data(char_from_signature(sig(3, {1, 2})), t8, t8->l_cfg);
    auto duals = dual_basis_functionals(bd);
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::int64_t> dist(0, t8->W->pN - 1);
    auto phi_of = [&](const std::vector<FqElem> &phi, const LocalElem &x) {
        auto v = bd.basis.vector_of(decompose_unit(x));
        FqElem acc = FqElem::zero(bd.ambient);
        for (int k = 0; k < bd.basis.dim; ++k)
            if (v[size_t(k)] != 0) acc = acc + phi[size_t(k)] * FqElem::from_int(bd.ambient, v[size_t(k)]);
        return acc;
    };
    for (int it = 0; it < 10; ++it) {
        std::vector<WittElem> coords;
        for (int j = 0; j < t8->e; ++j)
            coords.emplace_back(t8->W, std::vector<std::int64_t>{dist(rng), dist(rng)});
        LocalElem x(t8, coords);
        if (x.v_pi() != 0) x = x + LocalElem::one(t8);
        GalElem g{0, 1 + int(rng() % 7)};
        for (const auto &phi : duals) {
            FqElem lhs = phi_of(phi, galois_apply(g, x));
            FqElem chig = bd.chi_tame.pow(g.tame_exp);
            CHECK(lhs == chig * phi_of(phi, x));
        }
    }
}

TEST_CASE("membership and filtration degree on synthetic classes") {
    auto t8 = tower_create(3, 2, 1, 8, {1}, 6);
    auto chi = char_from_signature(sig(3, {1, 2}));
    auto bd = basis_data(chi, t8, t8->l_cfg);
    auto duals = dual_basis_functionals(bd);
    auto one3 = char_from_signature(sig(3, {2, 2}));

    ClassVector c0 = class_from_functional(bd, duals[0]);
    ClassVector c1 = class_from_functional(bd, duals[1]);
    CHECK(filtration_degree(c0, bd).s == Rat(13, 8));
    CHECK(filtration_degree(c1, bd).s == Rat(15, 8));

    // L_i membership: c_0 lies in the {0}-descriptor only
    LvDescriptor d0{2, 0b01, false, false}, d1{2, 0b10, false, false};
    CHECK(in_lv_ah(c0, d0));
    CHECK_FALSE(in_lv_ah(c0, d1));
    CHECK_FALSE(in_lv_ah(c1, d0));
    CHECK(in_lv_ah(c1, d1));

    // weight sets driven by computed classes
    auto ws = weights_reducible(chi, one3, oracle_for(symbolic_of(c1)));
    CHECK(weight_set_str(ws) == "{[0,0;1,2],[0,2;2,3]}");
}

TEST_CASE("class is invariant under change of uniformizer") {
    // pi' = (1 + 3w) pi on the sig (1,2) tower
    auto t = tower_create(3, 2, 1, 8, {1}, 6);
    auto chi = char_from_signature(sig(3, {1, 2}));
    auto bd = basis_data(chi, t, t->l_cfg);
    auto duals = dual_basis_functionals(bd);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 3; ++trial) {
        WittElem w(t->W, {std::int64_t(rng() % 9), std::int64_t(rng() % 9)});
        WittElem s = WittElem::one(t->W) + w.times_p(1); // 1 + 3w
        WittElem unew = t->u * s.pow(t->e);
        auto t2 = tower_create(3, 2, 1, 8, unew.coeffs(), 6);
        auto bd2 = basis_data(chi, t2, t->l_cfg);

        // the same functional, transported: phi'(x') = phi(x' rewritten in pi)
        WittElem sinv_in_t2 = WittElem(t2->W, s.coeffs()).inverse();
        auto transported_coord = [&](const std::vector<FqElem> &phi, int j) {
            FqElem acc = FqElem::zero(bd.ambient);
            for (int r = 0; r < t->l_cfg->m; ++r) {
                std::vector<std::int64_t> c(size_t(t->l_cfg->m), 0);
                c[size_t(r)] = 1;
                LocalElem u2 = ah_unit(FqElem(t->l_cfg, c), bd2.nprime[size_t(j)], t2);
                LocalElem back = convert_uniformizer(u2, t, sinv_in_t2);
                auto v = bd.basis.vector_of(decompose_unit(back));
                FqElem val = FqElem::zero(bd.ambient);
                for (int k = 0; k < bd.basis.dim; ++k)
                    if (v[size_t(k)] != 0)
                        val = val + phi[size_t(k)] * FqElem::from_int(bd.ambient, v[size_t(k)]);
                acc = acc + bd2.lambda[size_t(j)][size_t(r)] * val;
            }
            return acc;
        };

        for (int which : {0, 1}) {
            // class with support {which} in the old coordinates
            ClassVector cv_old = class_from_functional(bd, duals[size_t(which)]);
            ClassVector cv_new;
            cv_new.f = 2;
            for (int j = 0; j < 2; ++j)
                cv_new.tau.push_back(transported_coord(duals[size_t(which)], j));
            cv_new.un = FqElem::zero(bd.ambient);
            cv_new.cyc = FqElem::zero(bd.ambient);
            // generic signature: supports must agree exactly
            CHECK(cv_new.tau_support() == cv_old.tau_support());
        }
    }
}
