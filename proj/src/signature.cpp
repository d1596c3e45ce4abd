#include "serrewt/signature.hpp"

#include <algorithm>
#include <sstream>

namespace swt {

TameSignature::TameSignature(std::int64_t p_, int f_, std::vector<int> a_)
    : p(p_), f(f_), a(std::move(a_)) {
    if (int(a.size()) != f) throw SwtError("signature length must be f");
    bool all_p = true;
    for (int v : a) {
        if (v < 1 || v > int(p)) throw SwtError("signature entries must lie in [1, p]");
        if (v != int(p)) all_p = false;
    }
    if (all_p) throw SwtError("signature (p,...,p) is excluded");
}

std::int64_t TameSignature::pf1() const {
    std::int64_t r = 1;
    for (int i = 0; i < f; ++i) r *= p;
    return r - 1;
}

std::int64_t TameSignature::n(int i) const {
    std::int64_t r = 0, pw = 1;
    for (int j = 0; j < f; ++j) {
        r += at(i + j) * pw;
        pw *= p;
    }
    return r;
}

bool TameSignature::all_equal(int v) const {
    return std::all_of(a.begin(), a.end(), [v](int x) { return x == v; });
}

int TameSignature::period() const {
    for (int d = 1; d <= f; ++d) {
        if (f % d != 0) continue;
        bool ok = true;
        for (int i = 0; i < f && ok; ++i)
            if (a[size_t(i)] != at(i + d)) ok = false;
        if (ok) return d;
    }
    return f;
}

bool TameSignature::generic() const {
    return std::all_of(a.begin(), a.end(), [this](int x) { return x < int(p); });
}

TameSignature TameSignature::rotated(int k) const {
    // Frob . (a_0,...,a_{f-1}) = (a_{f-1}, a_0, ..., a_{f-2})
    std::vector<int> b(size_t(f), 0);
    for (int i = 0; i < f; ++i) b[size_t(i)] = at(i - k);
    return TameSignature(p, f, std::move(b));
}

TameSignature signature_from_exponent(std::int64_t p, int f, std::int64_t n) {
    std::int64_t mod = 1;
    for (int i = 0; i < f; ++i) mod *= p;
    mod -= 1;
    std::int64_t B = mod / (p - 1); // 1 + p + ... + p^(f-1)
    std::int64_t t = ((n - B) % mod + mod) % mod;
    std::vector<int> a(size_t(f), 0);
    for (int i = 0; i < f; ++i) {
        a[size_t(i)] = int(t % p) + 1;
        t /= p;
    }
    return TameSignature(p, f, std::move(a));
}

GaloisCharData char_from_signature(TameSignature sig) {
    GaloisCharData c;
    c.sig = std::move(sig);
    c.mu_trivial = true;
    c.mu_order = 1;
    return c;
}

GaloisCharData char_with_mu(TameSignature sig, const FqElem &mu_value) {
    GaloisCharData c;
    c.sig = std::move(sig);
    if (mu_value.is_zero()) throw ZeroInput("mu value must be nonzero");
    c.mu_trivial = (mu_value == FqElem::one(mu_value.config()));
    if (!c.mu_trivial) {
        c.mu_value = mu_value;
        c.mu_order = int(mult_order(mu_value));
    }
    return c;
}

GaloisCharData char_ratio(const GaloisCharData &chi1, const GaloisCharData &chi2) {
    const TameSignature &s1 = chi1.sig, &s2 = chi2.sig;
    if (s1.p != s2.p || s1.f != s2.f) throw SwtError("char_ratio: mismatched base");
    TameSignature sig = signature_from_exponent(s1.p, s1.f, s1.n(0) - s2.n(0));
    if (chi1.mu_trivial && chi2.mu_trivial) return char_from_signature(sig);
    if (!chi1.mu_trivial && !chi2.mu_trivial)
        return char_with_mu(sig, chi1.mu_value / chi2.mu_value);
    if (!chi1.mu_trivial) return char_with_mu(sig, chi1.mu_value);
    return char_with_mu(sig, chi2.mu_value.inverse());
}

int FiltrationDims::total() const {
    int t = 0;
    for (auto &[s, d] : jumps) t += d;
    return t;
}

int FiltrationDims::dim_up_to(const Rat &s, bool strict) const {
    int t = 0;
    for (auto &[u, d] : jumps)
        if (strict ? (u < s) : (u <= s)) t += d;
    return t;
}

FiltrationDims filtration_dims(const GaloisCharData &chi) {
    const TameSignature &sig = chi.sig;
    const std::int64_t p = sig.p;
    const int f = sig.f;
    const std::int64_t q1 = sig.pf1();
    FiltrationDims out;
    if (chi.is_trivial()) {
        out.jumps[Rat(0)] += 1;
        out.trivial_contrib = true;
    }
    // gentle range 1 < s < p/(p-1): jumps at s = n_j/(p^f-1) for j in R
    for (int j = 0; j < f; ++j) {
        if (sig.at(j) == int(p) - 1) continue;
        bool in_R = false;
        for (int i = j - f; i < j && !in_R; ++i) {
            if (sig.at(i) != int(p)) continue;
            bool chain = true;
            for (int t = i + 1; t < j && chain; ++t)
                if (sig.at(t) != int(p) - 1) chain = false;
            if (chain) in_R = true;
        }
        if (in_R) {
            Rat s(sig.n(j), q1);
            if (!(Rat(1) < s && s < Rat(p, p - 1)))
                throw SwtError("gentle jump out of range (internal)");
            out.jumps[s] += 1;
        }
    }
    // typical range p/(p-1) <= s < 1 + p/(p-1): s = 1 + n_i/(p^f-1), a_i != p
    for (int i = 0; i < f; ++i) {
        if (sig.at(i) == int(p)) continue;
        Rat s = Rat(1) + Rat(sig.n(i), q1);
        if (!(Rat(p, p - 1) <= s && s < Rat(1) + Rat(p, p - 1)))
            throw SwtError("typical jump out of range (internal)");
        out.jumps[s] += 1;
    }
    if (chi.is_cyclotomic()) {
        out.jumps[Rat(1) + Rat(p, p - 1)] += 1;
        out.cyclotomic_contrib = true;
    }
    return out;
}

SubspaceDims subspace_dims(const GaloisCharData &chi) {
    FiltrationDims fd = filtration_dims(chi);
    const std::int64_t p = chi.sig.p;
    SubspaceDims d;
    d.un = fd.dim_up_to(Rat(1), false);
    d.gt = fd.dim_up_to(Rat(p, p - 1), true);
    d.fl = fd.dim_up_to(Rat(p, p - 1), false);
    d.cg = fd.dim_up_to(Rat(2), false);
    d.ty = fd.dim_up_to(Rat(1) + Rat(p, p - 1), true);
    d.h1 = fd.total();
    return d;
}

std::set<std::pair<int, int>> dependent_pairs(const TameSignature &sig) {
    std::set<std::pair<int, int>> out;
    const int f = sig.f;
    const int p = int(sig.p);
    for (int i = 0; i < f; ++i) {
        if (sig.at(i + 1) != p) continue;
        for (int t = 1; t <= f - 1; ++t) {
            if (sig.at(i + t + 1) == p) continue;
            bool ok = false;
            for (int s = 1; s <= t && !ok; ++s) {
                bool chain = true;
                for (int v = i + 2; v <= i + s && chain; ++v)
                    if (sig.at(v) != p - 1) chain = false;
                for (int v = i + s + 1; v <= i + t && chain; ++v)
                    if (sig.at(v) != p) chain = false;
                if (chain) ok = true;
            }
            if (ok) out.insert({i, ((i + t) % f + f) % f});
        }
    }
    return out;
}

bool is_admissible(const TameSignature &sig, Subset J) {
    for (auto &[src, tgt] : dependent_pairs(sig))
        if ((J >> tgt) & 1u) {
            if (!((J >> src) & 1u)) return false;
        }
    return true;
}

int delta_int(const TameSignature &sig, int j) {
    const int p = int(sig.p);
    int c = 0;
    while (c < sig.f && sig.at(j - c) == p - 1) ++c;
    if (c < sig.f && sig.at(j - c) == p) return j - c - 1;
    return j;
}

Subset delta_shift(const TameSignature &sig, Subset J) {
    Subset out = 0;
    for (int i = 0; i < sig.f; ++i)
        if ((J >> i) & 1u) {
            int d = ((delta_int(sig, i) % sig.f) + sig.f) % sig.f;
            out |= (1u << d);
        }
    return out;
}

namespace {

Subset mu_shift_with_choice(const TameSignature &sig, Subset J, int i1) {
    const int f = sig.f;
    // j1 = least integer > i1 with [j1] in J and delta(j1) = i1 (integer equality)
    int j1 = -1;
    for (int j = i1 + 1; j <= i1 + f; ++j) {
        if (!((J >> ((j % f + f) % f)) & 1u)) continue;
        if (delta_int(sig, j) == i1) { j1 = j; break; }
    }
    if (j1 < 0) throw SwtError("mu_shift: no j1 for the chosen i1 (internal)");
    // list J as integers j1 < j2 < ... < jr < j1 + f
    std::vector<int> js{j1};
    for (int j = j1 + 1; j < j1 + f; ++j)
        if ((J >> ((j % f + f) % f)) & 1u) js.push_back(j);
    std::vector<int> is{i1};
    for (size_t k = 1; k < js.size(); ++k) {
        int dj = delta_int(sig, js[k]);
        is.push_back(is[k - 1] < dj ? dj : js[k]);
    }
    for (size_t k = 1; k < is.size(); ++k)
        if (!(is[k - 1] < is[k])) throw SwtError("mu_shift: indices not increasing (internal)");
    if (is.back() >= i1 + f) throw SwtError("mu_shift: index wrapped (internal)");
    Subset out = 0;
    for (int i : is) out |= (1u << ((i % f + f) % f));
    return out;
}

} // namespace

Subset mu_shift(const TameSignature &sig, Subset J) {
    Subset dJ = delta_shift(sig, J);
    if ((dJ & ~J) == 0) return J;
    // try every valid starting choice and insist the answers agree
    Subset result = 0;
    bool have = false;
    for (int i1 = 0; i1 < sig.f; ++i1) {
        if (!((dJ >> i1) & 1u) || ((J >> i1) & 1u)) continue;
        Subset r = mu_shift_with_choice(sig, J, i1);
        if (have && r != result) throw SwtError("mu_shift: result depends on choice of i1");
        result = r;
        have = true;
    }
    if (!have) throw SwtError("mu_shift: no valid starting index (internal)");
    return result;
}

std::pair<int, std::int64_t> basis_level(const TameSignature &sig, int e, int i) {
    const std::int64_t q1 = sig.pf1();
    if (q1 % e != 0) throw SwtError("basis_level: e must divide p^f - 1");
    if ((sig.n(0) * e) % q1 != 0) throw SwtError("basis_level: chi does not factor through level e");
    if (sig.at(i + 1) != int(sig.p)) {
        return {((i + 1) % sig.f + sig.f) % sig.f, e * sig.n(i + 1) / q1};
    }
    int j = i + 1;
    while (sig.at(j + 1) == int(sig.p) - 1) ++j;
    return {((j + 1) % sig.f + sig.f) % sig.f, e * sig.n(j + 1) / q1 - e};
}

int popcount(Subset s) { return __builtin_popcount(s); }

std::string subset_str(Subset J, int f) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; i < f; ++i)
        if ((J >> i) & 1u) {
            if (!first) os << ",";
            os << i;
            first = false;
        }
    os << "}";
    return os.str();
}

} // namespace swt
