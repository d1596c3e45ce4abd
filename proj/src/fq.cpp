#include "serrewt/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace swt {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t modp(std::int64_t x, std::int64_t p) {
    x %= p;
    return x < 0 ? x + p : x;
}

// dense polynomial arithmetic over F_p, lowest degree first
using Poly = std::vector<std::int64_t>;

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly &a, const Poly &b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = modp(r[i + j] + a[i] * b[j], p);
    trim(r);
    return r;
}

Poly poly_mod(Poly a, const Poly &m, std::int64_t p) {
    trim(a);
    const int dm = int(m.size()) - 1;
    while (int(a.size()) - 1 >= dm) {
        const int shift = int(a.size()) - 1 - dm;
        std::int64_t lead = a.back(); // m monic
        for (int i = 0; i <= dm; ++i)
            a[shift + i] = modp(a[shift + i] - lead * m[i], p);
        trim(a);
    }
    return a;
}

Poly poly_powmod(Poly base, std::int64_t k, const Poly &m, std::int64_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (k > 0) {
        if (k & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        k >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic for poly_mod
        std::int64_t inv = 1, lead = b.back();
        for (std::int64_t t = 1; t < p; ++t)
            if (modp(lead * t, p) == 1) { inv = t; break; }
        Poly bm = b;
        for (auto &c : bm) c = modp(c * inv, p);
        Poly r = poly_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin irreducibility test; fields are tiny so this is instant.
bool poly_irreducible(const Poly &m, std::int64_t p) {
    const int d = int(m.size()) - 1;
    if (d < 1) return false;
    if (d == 1) return true;
    // x^(p^d) == x mod m
    std::int64_t pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;
    Poly xp = poly_powmod(Poly{0, 1}, pd, m, p);
    Poly diff = xp;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = modp(diff[1] - 1, p);
    trim(diff);
    if (!diff.empty()) return false;
    // gcd(x^(p^(d/l)) - x, m) == 1 for every prime l | d
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool lprime = is_prime(l);
        if (!lprime) continue;
        std::int64_t pe = 1;
        for (int i = 0; i < d / l; ++i) pe *= p;
        Poly y = poly_powmod(Poly{0, 1}, pe, m, p);
        y.resize(std::max<size_t>(y.size(), 2), 0);
        y[1] = modp(y[1] - 1, p);
        trim(y);
        Poly g = poly_gcd(m, y, p);
        if (int(g.size()) - 1 >= 1) return false;
    }
    return true;
}

// fixed default moduli; keeps fixtures and tests reproducible
const std::map<std::pair<std::int64_t, int>, Poly> &default_moduli() {
    static const std::map<std::pair<std::int64_t, int>, Poly> table = {
        {{2, 1}, {0, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{3, 1}, {0, 1}},
        {{3, 2}, {2, 2, 1}},       // x^2 - x - 1
        {{3, 4}, {2, 0, 0, 2, 1}}, // x^4 - x^3 - 1
        {{5, 1}, {0, 1}},
        {{5, 2}, {2, 4, 1}},       // x^2 - x + 2
        {{7, 1}, {0, 1}},
        {{7, 2}, {3, 6, 1}},       // x^2 - x + 3
    };
    return table;
}

Poly first_irreducible(std::int64_t p, int m) {
    // lexicographic scan over constant-first coefficient vectors
    std::int64_t count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
        Poly f(m + 1, 0);
        std::int64_t t = idx;
        for (int i = 0; i < m; ++i) { f[i] = t % p; t /= p; }
        f[m] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw SwtError("no irreducible polynomial found"); // unreachable
}

} // namespace

FqConfigPtr field_create(std::int64_t p, int m, std::optional<std::vector<std::int64_t>> modulus) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p));
    if (m < 1) throw SwtError("extension degree must be >= 1");
    Poly mod;
    if (modulus) {
        mod = *modulus;
        for (auto &c : mod) c = modp(c, p);
        trim(mod);
        if (int(mod.size()) - 1 != m || mod.back() != 1)
            throw SwtError("modulus must be monic of degree m");
        if (!poly_irreducible(mod, p))
            throw ReducibleModulus("degree " + std::to_string(m) + " over F_" + std::to_string(p));
    } else {
        auto it = default_moduli().find({p, m});
        mod = (it != default_moduli().end()) ? it->second : first_irreducible(p, m);
    }
    auto cfg = std::make_shared<FqConfig>();
    cfg->p = p;
    cfg->m = m;
    cfg->modulus = mod;
    cfg->q = 1;
    for (int i = 0; i < m; ++i) cfg->q *= p;
    return cfg;
}

FqElem::FqElem(FqConfigPtr cfg, std::vector<std::int64_t> coeffs) : cfg_(std::move(cfg)) {
    c_.assign(size_t(cfg_->m), 0);
    Poly tmp = std::move(coeffs);
    for (auto &c : tmp) c = modp(c, cfg_->p);
    tmp = poly_mod(std::move(tmp), cfg_->modulus, cfg_->p);
    for (size_t i = 0; i < tmp.size(); ++i) c_[i] = tmp[i];
}

FqElem FqElem::zero(const FqConfigPtr &cfg) { return FqElem(cfg, {}); }
FqElem FqElem::one(const FqConfigPtr &cfg) { return FqElem(cfg, {1}); }
FqElem FqElem::from_int(const FqConfigPtr &cfg, std::int64_t n) { return FqElem(cfg, {n}); }

FqElem FqElem::from_index(const FqConfigPtr &cfg, std::int64_t idx) {
    std::vector<std::int64_t> c(size_t(cfg->m), 0);
    for (int i = 0; i < cfg->m; ++i) { c[size_t(i)] = idx % cfg->p; idx /= cfg->p; }
    return FqElem(cfg, std::move(c));
}

std::int64_t FqElem::index() const {
    std::int64_t idx = 0;
    for (int i = cfg_->m - 1; i >= 0; --i) idx = idx * cfg_->p + c_[size_t(i)];
    return idx;
}

bool FqElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

bool FqElem::in_prime_field() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::int64_t FqElem::as_prime_int() const {
    if (!in_prime_field()) throw SwtError("element not in prime field");
    return c_.empty() ? 0 : c_[0];
}

static void check_same(const FqElem &a, const FqElem &b) {
    if (!a.config() || !b.config() || !(*a.config() == *b.config()))
        throw SwtError("field mismatch");
}

FqElem operator+(const FqElem &a, const FqElem &b) {
    check_same(a, b);
    std::vector<std::int64_t> c(a.coeffs());
    for (size_t i = 0; i < c.size(); ++i) c[i] = modp(c[i] + b.coeffs()[i], a.config()->p);
    return FqElem(a.config(), std::move(c));
}

FqElem operator-(const FqElem &a, const FqElem &b) {
    check_same(a, b);
    std::vector<std::int64_t> c(a.coeffs());
    for (size_t i = 0; i < c.size(); ++i) c[i] = modp(c[i] - b.coeffs()[i], a.config()->p);
    return FqElem(a.config(), std::move(c));
}

FqElem FqElem::operator-() const {
    std::vector<std::int64_t> c(c_);
    for (auto &v : c) v = modp(-v, cfg_->p);
    return FqElem(cfg_, std::move(c));
}

FqElem operator*(const FqElem &a, const FqElem &b) {
    check_same(a, b);
    Poly r = poly_mod(poly_mul(a.coeffs(), b.coeffs(), a.config()->p),
                      a.config()->modulus, a.config()->p);
    return FqElem(a.config(), std::move(r));
}

FqElem operator/(const FqElem &a, const FqElem &b) { return a * b.inverse(); }

bool operator==(const FqElem &a, const FqElem &b) {
    return a.config() && b.config() && *a.config() == *b.config() && a.coeffs() == b.coeffs();
}

FqElem FqElem::pow(std::int64_t k) const {
    if (is_zero()) {
        if (k < 0) throw ZeroInput("0 has no negative powers");
        return k == 0 ? one(cfg_) : *this;
    }
    std::int64_t ord = cfg_->q - 1;
    k %= ord;
    if (k < 0) k += ord;
    FqElem r = one(cfg_), base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

FqElem FqElem::inverse() const {
    if (is_zero()) throw ZeroInput("inverse of zero");
    return pow(cfg_->q - 2);
}

std::string FqElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = cfg_->m - 1; i >= 0; --i) {
        std::int64_t v = c_[size_t(i)];
        if (v == 0) continue;
        if (!first) os << "+";
        if (i == 0 || v != 1) os << v;
        if (i >= 1) os << "a";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FqElem frobenius(const FqElem &x, int k) {
    FqElem r = x;
    for (int i = 0; i < ((k % x.config()->m) + x.config()->m) % x.config()->m; ++i)
        r = r.pow(x.config()->p);
    return r;
}

FqElem trace_to_prime(const FqElem &x) { return trace_to_subdegree(x, 1); }

FqElem trace_to_subdegree(const FqElem &x, int d) {
    const int m = x.config()->m;
    if (d < 1 || m % d != 0) throw SwtError("trace: d must divide m");
    FqElem acc = FqElem::zero(x.config());
    FqElem t = x;
    for (int j = 0; j < m / d; ++j) {
        acc = acc + t;
        t = frobenius(t, d);
    }
    return acc;
}

bool is_square(const FqElem &x) {
    if (x.config()->p == 2) throw EvenCharacteristic("is_square needs odd p");
    if (x.is_zero()) throw ZeroInput("is_square(0)");
    return x.pow((x.config()->q - 1) / 2) == FqElem::one(x.config());
}

std::int64_t mult_order(const FqElem &x) {
    if (x.is_zero()) throw ZeroInput("order of zero");
    FqElem t = x;
    std::int64_t k = 1;
    while (!(t == FqElem::one(x.config()))) {
        t = t * x;
        ++k;
        if (k > x.config()->q) throw SwtError("order loop overflow");
    }
    return k;
}

std::int64_t dlog(const FqElem &x, const FqElem &base) {
    if (x.is_zero()) throw ZeroInput("dlog(0)");
    if (mult_order(base) != base.config()->q - 1)
        throw NotGenerator(base.str());
    FqElem t = FqElem::one(x.config());
    for (std::int64_t k = 0; k < x.config()->q - 1; ++k) {
        if (t == x) return k;
        t = t * base;
    }
    throw SwtError("dlog: unreachable");
}

FqElem canonical_generator(const FqConfigPtr &cfg) {
    for (std::int64_t idx = 1; idx < cfg->q; ++idx) {
        FqElem x = FqElem::from_index(cfg, idx);
        if (mult_order(x) == cfg->q - 1) return x;
    }
    throw SwtError("no generator found");
}

FqElem embed(const FqElem &x, const FqConfigPtr &target) {
    const FqConfigPtr &src = x.config();
    if (src->p != target->p || target->m % src->m != 0)
        throw SwtError("embed: target is not an extension");
    if (*src == *target) return x;

    struct Key {
        std::int64_t p;
        std::vector<std::int64_t> ms, mt;
        bool operator<(const Key &o) const {
            return std::tie(p, ms, mt) < std::tie(o.p, o.ms, o.mt);
        }
    };
    static std::map<Key, std::vector<std::int64_t>> cache;
    static std::mutex mtx;

    Key key{src->p, src->modulus, target->modulus};
    std::vector<std::int64_t> root_coeffs;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) root_coeffs = it->second;
    }
    if (root_coeffs.empty()) {
        // lexicographically least root of the source modulus in the target
        bool found = false;
        for (std::int64_t idx = 0; idx < target->q && !found; ++idx) {
            FqElem z = FqElem::from_index(target, idx);
            FqElem acc = FqElem::zero(target);
            FqElem zp = FqElem::one(target);
            for (size_t i = 0; i < src->modulus.size(); ++i) {
                acc = acc + FqElem::from_int(target, src->modulus[i]) * zp;
                zp = zp * z;
            }
            if (acc.is_zero()) {
                root_coeffs = z.coeffs();
                found = true;
            }
        }
        if (!found) throw SwtError("embed: no root of source modulus in target");
        std::lock_guard<std::mutex> lock(mtx);
        cache[key] = root_coeffs;
    }
    FqElem r(target, root_coeffs);
    FqElem acc = FqElem::zero(target);
    FqElem rp = FqElem::one(target);
    for (int i = 0; i < src->m; ++i) {
        acc = acc + FqElem::from_int(target, x.coeffs()[size_t(i)]) * rp;
        rp = rp * r;
    }
    return acc;
}

std::string to_power_string(const FqElem &x) {
    if (x.is_zero()) return "0";
    FqElem g = canonical_generator(x.config());
    std::int64_t k = dlog(x, g);
    if (k == 0) return "1";
    if (x.in_prime_field()) return std::to_string(x.as_prime_int());
    if (k == 1) return "a";
    return "a^" + std::to_string(k);
}

FqElem parse_power_string(const FqConfigPtr &cfg, const std::string &s) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = (t[0] == '-');
        t = t.substr(1);
    }
    FqElem v = FqElem::zero(cfg);
    if (t.empty()) throw SchemaError("empty field element string");
    if (t == "a") {
        v = canonical_generator(cfg);
    } else if (t.rfind("a^", 0) == 0) {
        std::int64_t k = std::stoll(t.substr(2));
        v = canonical_generator(cfg).pow(k);
    } else {
        v = FqElem::from_int(cfg, std::stoll(t));
    }
    return neg ? -v : v;
}

} // namespace swt
