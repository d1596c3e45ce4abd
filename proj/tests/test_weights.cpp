#include "doctest.h"

#include <algorithm>

#include "serrewt/weights.hpp"

using namespace swt;

namespace {

TameSignature sig(std::int64_t p, std::vector<int> a) {
    int f = int(a.size());
    return TameSignature(p, f, std::move(a));
}

struct Row {
    Subset J;
    std::vector<int> d, b;
};

// quadratic-case tables, transcribed closed forms used as the test oracle
std::vector<Row> quadratic_table(std::int64_t P, int a0, int a1) {
    const int p = int(P);
    std::vector<Row> rows;
    auto push = [&](Subset J, std::vector<int> d, std::vector<int> b) {
        rows.push_back({J, std::move(d), std::move(b)});
    };
    if (a1 == p) {
        // primitive non-generic
        auto bsplit = [&]() -> std::vector<int> {
            if (a0 < p - 2) return {p - 2 - a0, p - 1};
            if (p == 2) return {p, p - 1};
            // the congruences of the pair set force (p, p-2) here
            if (a0 == p - 2) return {p, p - 2};
            return {p - 1, p - 2}; // a0 = p-1, p > 2
        };
        if (a0 < p - 1) {
            push(0b11, {0, 0}, {a0, p});
            push(0b01, {p - 2, p - 1}, {a0 + 2, p});
            push(0b10, {a0, p - 1}, {p - 1 - a0, 1});
            push(0b00, {a0, p}, bsplit());
        } else {
            push(0b11, {0, 0}, {p - 1, p});
            push(0b01, {p - 1, 0}, {1, p - 1});
            push(0b10, {p - 1, p - 2}, {p, 2});
            push(0b00, {0, 1}, bsplit());
        }
        return rows;
    }
    // generic columns
    push(0b11, {0, 0}, {a0, a1});
    push(0b01, {p - 1, a1 - 1}, {a0 + 1, p - a1});
    push(0b10, {a0 - 1, p - 1}, {p - a0, a1 + 1});
    std::vector<int> bempty;
    if (a0 == a1 && a0 == p - 1) {
        bempty = {p - 1, p - 1};
    } else if (a1 < p - 1) {
        bempty = {p - 1 - a0, p - 1 - a1};
    } else if (a1 == p - 1 && a0 < p - 2) {
        bempty = {p - 2 - a0, p};
    } else {
        bempty = {p, p - 1}; // (a0, a1) = (p-2, p-1)
    }
    push(0b00, {a0, a1}, bempty);
    if (a0 == a1) {
        // imprimitive extras
        if (a0 == 1) push(0b11, {0, 0}, {p, p});
        if (a0 == p - 2) push(0b00, {p - 2, p - 2}, {p, p});
        if (a0 == p - 1) {
            push(0b01, {p - 2, p - 1}, {1, p});
            push(0b10, {p - 1, p - 2}, {p, 1});
            if (p == 2) push(0b00, {0, 0}, {2, 2});
        }
    }
    return rows;
}

std::vector<SerreWeight> sorted_weights(std::vector<SerreWeight> ws) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
}

SerreWeight W(std::int64_t p, std::vector<int> d, std::vector<int> b) {
    return SerreWeight(p, int(d.size()), d, std::move(b));
}

} // namespace

TEST_CASE("weight normalization and twisting") {
    // d only matters through its exponent mod p^f - 1
    CHECK(W(3, {1, 3}, {3, 2}) == W(3, {2, 0}, {3, 2})); // 1 + 3*3 = 10 = 2 mod 8
    CHECK(W(3, {0, 0}, {1, 2}).twisted(5) == W(3, {2, 1}, {1, 2}));
    CHECK(W(3, {2, 1}, {1, 2}).str() == "[2,1;1,2]");
}

TEST_CASE("weight pairs against the quadratic tables") {
    for (std::int64_t p : {3, 5}) {
        GaloisCharData one = char_from_signature(sig(p, {int(p) - 1, int(p) - 1}));
        for (int a0 = 1; a0 <= int(p) - 1; ++a0)
            for (int a1 = a0; a1 <= int(p); ++a1) {
                if (a0 == int(p) && a1 == int(p)) continue;
                auto chi = char_from_signature(sig(p, {a0, a1}));
                auto pairs = weight_pairs(chi, one);
                auto table = quadratic_table(p, a0, a1);
                CHECK(pairs.size() == table.size());
                for (const auto &row : table) {
                    SerreWeight V(p, 2, row.d, row.b);
                    bool found = false;
                    for (const auto &pr : pairs)
                        if (pr.V == V && pr.J == row.J) found = true;
                    CHECK_MESSAGE(found, "missing (", subset_str(row.J, 2), ", ", V.str(),
                                  ") for sig (", a0, ",", a1, "), p=", p);
                }
            }
    }
}

TEST_CASE("weight pairs swap symmetry") {
    auto chi1 = char_from_signature(sig(3, {1, 2}));
    auto chi2 = char_from_signature(sig(3, {2, 3}));
    auto ab = weight_pairs(chi1, chi2);
    auto ba = weight_pairs(chi2, chi1);
    CHECK(ab.size() == ba.size());
    for (const auto &pr : ab) {
        Subset comp = ((1u << 2) - 1) & ~pr.J;
        bool found = false;
        for (const auto &qr : ba)
            if (qr.V == pr.V && qr.J == comp) found = true;
        CHECK(found);
    }
}

TEST_CASE("cyclotomic-restriction extras appear") {
    auto chi = char_from_signature(sig(3, {1, 1}));
    auto one = char_from_signature(sig(3, {2, 2}));
    auto pairs = weight_pairs(chi, one);
    bool has11 = false, has33 = false;
    for (const auto &pr : pairs) {
        if (pr.J == 0b11 && pr.V == W(3, {0, 0}, {1, 1})) has11 = true;
        if (pr.J == 0b11 && pr.V == W(3, {0, 0}, {3, 3})) has33 = true;
    }
    CHECK(has11);
    CHECK(has33);
}

TEST_CASE("j_max selection") {
    auto one3 = char_from_signature(sig(3, {2, 2}));
    // Case I: unique J per V
    {
        auto chi = char_from_signature(sig(3, {1, 2}));
        for (const auto &pr : weight_pairs(chi, one3))
            CHECK(j_max(pr.V, chi, one3) == pr.J);
    }
    // chi with trivial restriction, b = (p-1,...,p-1): J_max nonempty
    {
        auto chi = one3;
        SerreWeight V = W(3, {0, 0}, {2, 2});
        auto jm = j_max(V, chi, one3);
        REQUIRE(jm.has_value());
        CHECK(*jm == 0b11);
    }
    // absent weight
    {
        auto chi = char_from_signature(sig(3, {1, 2}));
        CHECK_FALSE(j_max(W(3, {0, 0}, {2, 2}), chi, one3).has_value());
    }
    // Case II, a0 = p-1: the bullet rows are exactly the non-maximal ones
    for (std::int64_t p : {3, 5}) {
        auto chi = char_from_signature(sig(p, {int(p) - 1, int(p) - 1}));
        auto one = char_from_signature(sig(p, {int(p) - 1, int(p) - 1}));
        SerreWeight V1(p, 2, {int(p) - 2, int(p) - 1}, {1, int(p)});
        auto jm = j_max(V1, chi, one);
        REQUIRE(jm.has_value());
        CHECK(*jm == 0b10); // the main-table column {1}, not the bullet {0}
    }
}

TEST_CASE("lv descriptors") {
    auto one3 = char_from_signature(sig(3, {2, 2}));
    {
        auto chi = char_from_signature(sig(3, {1, 3}));
        // V with J_max = {1} has index set mu({1}) = {0}
        SerreWeight V = W(3, {1, 2}, {1, 1});
        auto d = lv_ah_descriptor(V, chi, one3);
        CHECK(d.index_set == 0b01);
        CHECK_FALSE(d.include_unramified);
        CHECK_FALSE(d.full_space);
    }
    {
        auto chi = char_from_signature(sig(3, {1, 1})); // cyclotomic
        auto d = lv_ah_descriptor(W(3, {0, 0}, {3, 3}), chi, one3);
        CHECK(d.full_space);
        auto d2 = lv_ah_descriptor(W(3, {0, 0}, {1, 1}), chi, one3);
        CHECK_FALSE(d2.full_space);
        CHECK(d2.index_set == 0b11);
    }
    {
        // chi trivial: c_un joins every descriptor
        auto d = lv_ah_descriptor(W(3, {2, 1}, {3, 1}), one3, one3); // J_max = {0}
        CHECK(d.index_set == 0b01);
        CHECK(d.include_unramified);
        CHECK_FALSE(d.full_space);
    }
}

TEST_CASE("reducible weight sets for the quadratic scenarios") {
    auto one3 = char_from_signature(sig(3, {2, 2}));
    auto zero = oracle_for(SymbolicClass::zero());
    auto support = [&](std::set<int> s) {
        SymbolicClass c;
        c.tau_support = std::move(s);
        return oracle_for(c);
    };

    // Case I, sig (1,2)
    auto chiI = char_from_signature(sig(3, {1, 2}));
    CHECK(weights_reducible(chiI, one3, oracle_for(SymbolicClass::generic(char_ratio(chiI, one3)))) ==
          sorted_weights({W(3, {0, 0}, {1, 2})}));
    CHECK(weights_reducible(chiI, one3, support({1})) ==
          sorted_weights({W(3, {0, 0}, {1, 2}), W(3, {0, 2}, {2, 3})}));
    CHECK(weights_reducible(chiI, one3, support({0})) ==
          sorted_weights({W(3, {0, 0}, {1, 2}), W(3, {2, 1}, {2, 1})}));
    CHECK(weights_reducible(chiI, one3, zero).size() == 4);

    // Case III, sig (1,3)
    auto chiIII = char_from_signature(sig(3, {1, 3}));
    CHECK(weights_reducible(chiIII, one3, support({1})) == sorted_weights({W(3, {0, 0}, {1, 3})}));
    CHECK(weights_reducible(chiIII, one3, support({0})) ==
          sorted_weights({W(3, {0, 0}, {1, 3}), W(3, {1, 2}, {3, 3}), W(3, {1, 2}, {1, 1})}));
    CHECK(weights_reducible(chiIII, one3, zero) ==
          sorted_weights({W(3, {0, 0}, {1, 3}), W(3, {1, 2}, {3, 3}), W(3, {1, 2}, {1, 1}),
                          W(3, {2, 0}, {3, 1})}));

    // Case II, sig (1,1), chi cyclotomic
    auto chiII = char_from_signature(sig(3, {1, 1}));
    auto ratioII = char_ratio(chiII, one3);
    CHECK(weights_reducible(chiII, one3, oracle_for(SymbolicClass::generic(ratioII))) ==
          sorted_weights({W(3, {0, 0}, {3, 3})}));
    CHECK(weights_reducible(chiII, one3, support({0, 1})) ==
          sorted_weights({W(3, {0, 0}, {3, 3}), W(3, {0, 0}, {1, 1})}));
    CHECK(weights_reducible(chiII, one3, support({1})) ==
          sorted_weights({W(3, {0, 0}, {3, 3}), W(3, {0, 0}, {1, 1}), W(3, {0, 2}, {2, 2})}));
    CHECK(weights_reducible(chiII, one3, support({0})) ==
          sorted_weights({W(3, {0, 0}, {3, 3}), W(3, {0, 0}, {1, 1}), W(3, {2, 0}, {2, 2})}));
    CHECK(weights_reducible(chiII, one3, zero) ==
          sorted_weights({W(3, {0, 0}, {3, 3}), W(3, {0, 0}, {1, 1}), W(3, {2, 0}, {2, 2}),
                          W(3, {0, 2}, {2, 2}), W(3, {1, 1}, {1, 1}), W(3, {1, 1}, {3, 3})}));
}

TEST_CASE("irreducible weights against the closed forms") {
    // f = 2, case with 2 <= a0 <= p-1, 1 <= a1 <= p-2
    for (std::int64_t p : {3, 5}) {
        for (int a0 = 2; a0 <= int(p) - 1; ++a0)
            for (int a1 = 1; a1 <= int(p) - 2; ++a1) {
                auto got = weights_irreducible(p, 2, a0 + a1 * p);
                auto expect = sorted_weights({
                    W(p, {0, 0}, {a0, a1}),
                    W(p, {a0 - 1, a1}, {int(p) + 1 - a0, int(p) - 1 - a1}),
                    W(p, {a0 - 1, int(p) - 1}, {int(p) - a0, a1 + 1}),
                    W(p, {0, a1}, {a0 - 1, int(p) - a1}),
                });
                CHECK_MESSAGE(got == expect, "case IV failed at p=", p, " a0=", a0, " a1=", a1);
            }
        for (int a0 = 1; a0 <= int(p) - 1; ++a0) {
            auto got = weights_irreducible(p, 2, a0);
            std::vector<SerreWeight> expect = {
                W(p, {int(p) - 2, int(p) - 1}, {a0 + 1, int(p)}),
                W(p, {a0 - 1, 0}, {int(p) + 1 - a0, int(p) - 1}),
                W(p, {a0 - 1, int(p) - 1}, {int(p) - a0, 1}),
            };
            if (a0 != 1) expect.push_back(W(p, {0, 0}, {a0 - 1, int(p)}));
            CHECK_MESSAGE(got == sorted_weights(expect), "case V failed at p=", p, " a0=", a0);
        }
    }
    // f = 1
    for (std::int64_t p : {3, 5, 7})
        for (int a = 1; a <= int(p) - 1; ++a) {
            auto got = weights_irreducible(p, 1, a);
            CHECK(got == sorted_weights({W(p, {0}, {a}), W(p, {a - 1}, {int(p) + 1 - a})}));
        }
    CHECK_THROWS_AS(weights_irreducible(3, 2, 10), ReducibleInput); // 10 = p^2 + 1
}

TEST_CASE("qp table cross-check with the reducible machinery") {
    for (std::int64_t p : {3, 5, 7}) {
        auto one = char_from_signature(sig(p, {int(p) - 1}));
        auto amb = field_create(p, 2);
        FqElem mu_nt = canonical_generator(amb); // some nontrivial unramified value
        for (int a = 1; a <= int(p) - 1; ++a) {
            for (bool mu_triv : {true, false}) {
                GaloisCharData chi = mu_triv
                                         ? char_from_signature(sig(p, {a}))
                                         : char_with_mu(sig(p, {a}), mu_nt);
                auto ratio = char_ratio(chi, one);
                std::vector<QpClassKind> kinds;
                if (a == 1 && mu_triv)
                    kinds = {QpClassKind::Split, QpClassKind::PeuRamifiee, QpClassKind::NotPeuRamifiee};
                else
                    kinds = {QpClassKind::Split, QpClassKind::NonSplit};
                for (auto kind : kinds) {
                    SymbolicClass cls;
                    switch (kind) {
                        case QpClassKind::Split: cls = SymbolicClass::zero(); break;
                        case QpClassKind::NonSplit: cls = SymbolicClass::generic(ratio); break;
                        case QpClassKind::PeuRamifiee: cls.tau_support = {0}; break;
                        case QpClassKind::NotPeuRamifiee: cls = SymbolicClass::generic(ratio); break;
                    }
                    auto via_table = weights_qp(p, a, mu_triv, kind);
                    auto via_recipe = weights_reducible(chi, one, oracle_for(cls));
                    CHECK_MESSAGE(via_table == via_recipe, "p=", p, " a=", a, " mu_triv=", mu_triv,
                                  " kind=", int(kind));
                }
            }
        }
    }
}
