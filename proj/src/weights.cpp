#include "serrewt/weights.hpp"

#include <algorithm>
#include <sstream>

namespace swt {

namespace {

std::int64_t ipow(std::int64_t b, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

std::vector<int> digits_of(std::int64_t n, std::int64_t p, int f) {
    std::vector<int> d(size_t(f), 0);
    for (int i = 0; i < f; ++i) {
        d[size_t(i)] = int(n % p);
        n /= p;
    }
    return d;
}

} // namespace

SerreWeight::SerreWeight(std::int64_t p_, int f_, const std::vector<int> &d_, std::vector<int> b_)
    : p(p_), f(f_), b(std::move(b_)) {
    if (int(d_.size()) != f || int(b.size()) != f) throw SwtError("weight vectors must have length f");
    for (int v : b)
        if (v < 1 || v > int(p)) throw SwtError("b entries must lie in [1, p]");
    std::int64_t mod = ipow(p, f) - 1;
    std::int64_t n = 0, pw = 1;
    for (int i = 0; i < f; ++i) {
        n += std::int64_t(d_[size_t(i)]) * pw;
        pw *= p;
    }
    n = ((n % mod) + mod) % mod;
    d = digits_of(n, p, f);
}

std::int64_t SerreWeight::d_exponent() const {
    std::int64_t n = 0, pw = 1;
    for (int i = 0; i < f; ++i) {
        n += d[size_t(i)] * pw;
        pw *= p;
    }
    return n;
}

SerreWeight SerreWeight::twisted(std::int64_t t) const {
    std::int64_t mod = ipow(p, f) - 1;
    std::int64_t n = ((d_exponent() + t) % mod + mod) % mod;
    return SerreWeight(p, f, digits_of(n, p, f), b);
}

std::string SerreWeight::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < f; ++i) os << (i ? "," : "") << d[size_t(i)];
    os << ";";
    for (int i = 0; i < f; ++i) os << (i ? "," : "") << b[size_t(i)];
    os << "]";
    return os.str();
}

std::vector<WeightPair> weight_pairs(const GaloisCharData &chi1, const GaloisCharData &chi2) {
    const TameSignature &s1 = chi1.sig;
    const std::int64_t p = s1.p;
    const int f = s1.f;
    const std::int64_t mod = ipow(p, f) - 1;
    const std::int64_t n1 = ((s1.n(0)) % mod + mod) % mod;
    const std::int64_t n2 = ((chi2.sig.n(0)) % mod + mod) % mod;

    std::vector<WeightPair> out;
    std::vector<int> b(size_t(f), 1);
    const std::int64_t bcount = ipow(p, f);
    for (std::int64_t bidx = 0; bidx < bcount; ++bidx) {
        std::int64_t t = bidx;
        for (int i = 0; i < f; ++i) {
            b[size_t(i)] = int(t % p) + 1;
            t /= p;
        }
        std::vector<std::int64_t> bp(size_t(f), 0);
        {
            std::int64_t pw = 1;
            for (int i = 0; i < f; ++i) {
                bp[size_t(i)] = b[size_t(i)] * pw;
                pw *= p;
            }
        }
        for (Subset J = 0; J < (1u << f); ++J) {
            std::int64_t sJ = 0, sC = 0;
            for (int i = 0; i < f; ++i)
                ((J >> i) & 1u ? sJ : sC) += bp[size_t(i)];
            // d + sJ = n1, d + sC = n2 (mod p^f - 1): solve for d and check
            std::int64_t dexp = ((n1 - sJ) % mod + mod) % mod;
            if (((dexp + sC) % mod) != n2 % mod) continue;
            out.push_back({SerreWeight(p, f, digits_of(dexp, p, f), b), J});
        }
    }
    return out;
}

std::vector<Subset> s_v(const SerreWeight &V, const std::vector<WeightPair> &pairs) {
    std::vector<Subset> out;
    for (const auto &pr : pairs)
        if (pr.V == V) out.push_back(pr.J);
    return out;
}

namespace {

// first J_max condition: a b-chain (p, p-1, ..., p-1, 1) from i to j with
// i..j-1 outside J forces j outside J
bool jmax_chain_ok(const SerreWeight &V, Subset J) {
    const int f = V.f;
    const int p = int(V.p);
    auto bat = [&](int i) { return V.b[size_t(((i % f) + f) % f)]; };
    auto inJ = [&](int i) { return (J >> (((i % f) + f) % f)) & 1u; };
    for (int i = 0; i < f; ++i) {
        if (bat(i) != p) continue;
        for (int t = 1; t <= f - 1; ++t) {
            int j = i + t;
            if (bat(j) != 1) continue;
            bool middles = true;
            for (int v = i + 1; v < j && middles; ++v)
                if (bat(v) != p - 1) middles = false;
            if (!middles) continue;
            bool outside = true;
            for (int v = i; v < j && outside; ++v)
                if (inJ(v)) outside = false;
            if (outside && inJ(j)) return false;
        }
    }
    return true;
}

bool jmax_nonempty_cond(const SerreWeight &V, Subset J) {
    const int p = int(V.p);
    bool all_pm1 = std::all_of(V.b.begin(), V.b.end(), [p](int x) { return x == p - 1; });
    bool all_two = (p == 2) && std::all_of(V.b.begin(), V.b.end(), [](int x) { return x == 2; });
    if ((all_pm1 || all_two) && J == 0) return false;
    return true;
}

} // namespace

std::optional<Subset> j_max(const SerreWeight &V, const GaloisCharData &chi1,
                            const GaloisCharData &chi2) {
    auto pairs = weight_pairs(chi1, chi2);
    auto js = s_v(V, pairs);
    if (js.empty()) return std::nullopt;
    std::vector<Subset> good;
    for (Subset J : js)
        if (jmax_chain_ok(V, J) && jmax_nonempty_cond(V, J)) good.push_back(J);
    if (good.size() != 1)
        throw WeightNotInRecipe("J_max is not unique for " + V.str() +
                                " (candidates: " + std::to_string(good.size()) + ")");
    return good[0];
}

LvDescriptor lv_ah_descriptor(const SerreWeight &V, const GaloisCharData &chi1,
                              const GaloisCharData &chi2) {
    auto jm = j_max(V, chi1, chi2);
    if (!jm) throw WeightNotInRecipe(V.str() + " occurs in no pair");
    GaloisCharData chi = char_ratio(chi1, chi2);
    LvDescriptor d;
    d.f = V.f;
    d.index_set = mu_shift(chi.sig, *jm);
    d.include_unramified = chi.is_trivial();
    bool all_p = std::all_of(V.b.begin(), V.b.end(), [&](int x) { return x == int(V.p); });
    d.full_space = chi.is_cyclotomic() && *jm == ((1u << V.f) - 1) && all_p;
    return d;
}

std::vector<SerreWeight> weights_reducible(const GaloisCharData &chi1,
                                           const GaloisCharData &chi2,
                                           const MembershipOracle &oracle) {
    auto pairs = weight_pairs(chi1, chi2);
    std::vector<SerreWeight> seen;
    std::vector<SerreWeight> out;
    for (const auto &pr : pairs) {
        if (std::find(seen.begin(), seen.end(), pr.V) != seen.end()) continue;
        seen.push_back(pr.V);
        LvDescriptor d = lv_ah_descriptor(pr.V, chi1, chi2);
        if (oracle(d)) out.push_back(pr.V);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SymbolicClass SymbolicClass::generic(const GaloisCharData &chi_ratio) {
    SymbolicClass c;
    for (int i = 0; i < chi_ratio.sig.f; ++i) c.tau_support.insert(i);
    c.un_support = chi_ratio.is_trivial();
    c.tr_support = chi_ratio.is_cyclotomic();
    return c;
}

MembershipOracle oracle_for(const SymbolicClass &cls) {
    return [cls](const LvDescriptor &d) {
        if (d.full_space) return true;
        if (cls.tr_support) return false;
        if (cls.un_support && !d.include_unramified) return false;
        for (int i : cls.tau_support)
            if (!((d.index_set >> i) & 1u)) return false;
        return true;
    };
}

std::vector<SerreWeight> weights_irreducible(std::int64_t p, int f, std::int64_t A) {
    const std::int64_t pf = ipow(p, f);
    const std::int64_t mod2 = pf * pf - 1;
    A = ((A % mod2) + mod2) % mod2;
    if (A % (pf + 1) == 0) throw ReducibleInput("exponent divisible by p^f + 1");

    std::vector<SerreWeight> out;
    std::vector<int> b(size_t(f), 1);
    for (std::int64_t dexp = 0; dexp < pf - 1; ++dexp) {
        for (std::int64_t bidx = 0; bidx < pf; ++bidx) {
            std::int64_t t = bidx;
            for (int i = 0; i < f; ++i) {
                b[size_t(i)] = int(t % p) + 1;
                t /= p;
            }
            // J' picks one lift (i or i+f) of each i in Z/2fZ
            for (std::uint32_t lift = 0; lift < (1u << f); ++lift) {
                std::int64_t sJ = 0, sC = 0;
                for (int i = 0; i < f; ++i) {
                    std::int64_t pj = ipow(p, i);
                    std::int64_t pjf = ipow(p, i + f);
                    if ((lift >> i) & 1u) {
                        sJ += b[size_t(i)] * pjf;
                        sC += b[size_t(i)] * pj;
                    } else {
                        sJ += b[size_t(i)] * pj;
                        sC += b[size_t(i)] * pjf;
                    }
                }
                std::int64_t dd = dexp * (1 + pf);
                bool c1 = ((dd + sJ - A) % mod2 + mod2) % mod2 == 0;
                bool c2 = ((dd + sC - pf * A) % mod2 + mod2) % mod2 == 0;
                if (c1 && c2) {
                    SerreWeight V(p, f, digits_of(dexp, p, f), b);
                    if (std::find(out.begin(), out.end(), V) == out.end()) out.push_back(V);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SerreWeight> weights_qp(std::int64_t p, int a, bool mu_trivial, QpClassKind kind) {
    if (a < 1 || a > int(p) - 1) throw SwtError("weights_qp: a must lie in [1, p-1]");
    auto W = [&](int d, int bb) { return SerreWeight(p, 1, {d}, {bb}); };
    const bool split = (kind == QpClassKind::Split);
    const bool chi_cyc = (a == 1) && mu_trivial;
    std::vector<SerreWeight> out;
    if (1 < a && a < int(p) - 1 && !split) {
        out = {W(0, a)};
    } else if (1 < a && a < int(p) - 2 && split) {
        out = {W(0, a), W(a, int(p) - 1 - a)};
    } else if (a == int(p) - 2 && p > 3 && split) {
        out = {W(0, int(p) - 2), W(int(p) - 2, int(p)), W(int(p) - 2, 1)};
    } else if (a == int(p) - 1 && p > 2) {
        out = {W(0, int(p) - 1)};
    } else if (a == 1 && chi_cyc && kind == QpClassKind::NotPeuRamifiee) {
        out = {W(0, int(p))};
    } else if (a == 1 && p > 3 && split) {
        out = {W(0, int(p)), W(0, 1), W(1, int(p) - 2)};
    } else if (a == 1 && p == 3 && split) {
        out = {W(0, 3), W(0, 1), W(1, 3), W(1, 1)};
    } else {
        out = {W(0, int(p)), W(0, 1)};
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string weight_set_str(const std::vector<SerreWeight> &ws) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < ws.size(); ++i) os << (i ? "," : "") << ws[i].str();
    os << "}";
    return os.str();
}

} // namespace swt
