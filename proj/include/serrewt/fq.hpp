#ifndef SERREWT_FQ_HPP_
#define SERREWT_FQ_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "serrewt/errors.hpp"

namespace swt {

/* F_{p^m} presented as F_p[x]/(modulus), modulus monic irreducible of degree m.
   All fields here are desk scale (p^m <= 3^8); everything is exhaustive-friendly. */
struct FqConfig {
    std::int64_t p = 0;
    int m = 0;
    std::vector<std::int64_t> modulus; // length m+1, monic, coefficients in [0,p)
    std::int64_t q = 0;                // p^m

    bool operator==(const FqConfig &o) const {
        return p == o.p && m == o.m && modulus == o.modulus;
    }
};

using FqConfigPtr = std::shared_ptr<const FqConfig>;

/// Builds a field config.  When no modulus is given a fixed deterministic
/// irreducible polynomial is chosen (table for common (p,m), else the
/// lexicographically first monic irreducible).
FqConfigPtr field_create(std::int64_t p, int m,
                         std::optional<std::vector<std::int64_t>> modulus = std::nullopt);

class FqElem {
public:
    FqElem() = default;
    FqElem(FqConfigPtr cfg, std::vector<std::int64_t> coeffs);

    static FqElem zero(const FqConfigPtr &cfg);
    static FqElem one(const FqConfigPtr &cfg);
    static FqElem from_int(const FqConfigPtr &cfg, std::int64_t n);
    /// Element with coefficient vector = base-p digits of idx, 0 <= idx < q.
    static FqElem from_index(const FqConfigPtr &cfg, std::int64_t idx);

    const FqConfigPtr &config() const { return cfg_; }
    const std::vector<std::int64_t> &coeffs() const { return c_; }
    std::int64_t index() const; // inverse of from_index
    bool is_zero() const;
    bool in_prime_field() const; // all coeffs above degree 0 vanish
    std::int64_t as_prime_int() const;

    friend FqElem operator+(const FqElem &a, const FqElem &b);
    friend FqElem operator-(const FqElem &a, const FqElem &b);
    friend FqElem operator*(const FqElem &a, const FqElem &b);
    friend FqElem operator/(const FqElem &a, const FqElem &b);
    FqElem operator-() const;
    friend bool operator==(const FqElem &a, const FqElem &b);
    friend bool operator!=(const FqElem &a, const FqElem &b) { return !(a == b); }

    FqElem pow(std::int64_t k) const;
    FqElem inverse() const;
    std::string str() const; // coefficient form, e.g. "2a+1"

private:
    FqConfigPtr cfg_;
    std::vector<std::int64_t> c_;
};

/// x^(p^k)
FqElem frobenius(const FqElem &x, int k = 1);
/// Sum of x^(p^j), j = 0..m-1; lands in F_p (returned in the same field).
FqElem trace_to_prime(const FqElem &x);
/// Trace of x in F_{p^m} down to the subfield of degree d (d | m).
FqElem trace_to_subdegree(const FqElem &x, int d);
/// True iff x is a nonzero square; p must be odd.
bool is_square(const FqElem &x);
/// Least k >= 0 with base^k = x.  base must generate the multiplicative group.
std::int64_t dlog(const FqElem &x, const FqElem &base);
/// Deterministic generator of F_q^*: first element in index order of full order.
FqElem canonical_generator(const FqConfigPtr &cfg);
/// Multiplicative order of x.
std::int64_t mult_order(const FqElem &x);

/// Ring homomorphism into a larger field (m_src | m_tgt), sending the source
/// generator to the lexicographically least root of the source modulus.
FqElem embed(const FqElem &x, const FqConfigPtr &target);

/// Formats x as a power of the canonical generator: "0", "1", or "a^k".
std::string to_power_string(const FqElem &x);
/// Parses "0", "1", "2", ..., "a", "a^k", optionally with a leading '-'.
FqElem parse_power_string(const FqConfigPtr &cfg, const std::string &s);

} // namespace swt

#endif
