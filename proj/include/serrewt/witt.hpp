#ifndef SERREWT_WITT_HPP_
#define SERREWT_WITT_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "serrewt/fq.hpp"

namespace swt {

/* W(l)/p^N presented as (Z/p^N)[s]/(m*(s)) where m* is the canonical lift of
   the residue modulus whose root class is Teichmueller (s^(p^m) = s).  With
   this choice the Frobenius is simply s -> s^p, a genuine ring automorphism
   reducing to x -> x^p mod p. */
struct WittRing {
    FqConfigPtr residue;
    int N = 0;
    std::int64_t pN = 0;
    std::vector<std::int64_t> modulus;              // m*(s), monic length m+1, mod p^N
    std::vector<std::vector<std::int64_t>> frob_mat; // column j = coeffs of (s^p)^j

    bool operator==(const WittRing &o) const {
        return *residue == *o.residue && N == o.N;
    }
};

using WittRingPtr = std::shared_ptr<const WittRing>;

WittRingPtr witt_ring(const FqConfigPtr &residue, int N);

class WittElem {
public:
    WittElem() = default;
    WittElem(WittRingPtr ring, std::vector<std::int64_t> coeffs);

    static WittElem zero(const WittRingPtr &r);
    static WittElem one(const WittRingPtr &r);
    static WittElem from_int(const WittRingPtr &r, std::int64_t n);

    const WittRingPtr &ring() const { return ring_; }
    const std::vector<std::int64_t> &coeffs() const { return c_; }
    bool is_zero() const;
    bool is_unit() const;
    /// p-adic valuation, capped at N (zero element returns N).
    int val_p() const;

    friend WittElem operator+(const WittElem &a, const WittElem &b);
    friend WittElem operator-(const WittElem &a, const WittElem &b);
    friend WittElem operator*(const WittElem &a, const WittElem &b);
    WittElem operator-() const;
    friend bool operator==(const WittElem &a, const WittElem &b);
    friend bool operator!=(const WittElem &a, const WittElem &b) { return !(a == b); }

    WittElem pow(std::int64_t k) const;
    WittElem inverse() const;           // unit required
    FqElem residue_elem() const;        // reduction mod p
    WittElem frobenius(int k = 1) const;
    /// Exact division by p^k; throws InexactDivision if any coefficient
    /// is not divisible.  The result carries k fewer known p-digits.
    WittElem divide_exact_p(int k) const;
    WittElem times_p(int k) const;
    /// Congruence mod p^n.
    bool congruent(const WittElem &b, int n) const;

private:
    std::vector<std::int64_t> reduced(std::vector<std::int64_t> v) const;
    WittRingPtr ring_;
    std::vector<std::int64_t> c_;
};

/// The unique lift w of a with w^(p^m) = w, computed as the fixpoint of
/// w -> w^(p^m) starting from the naive lift.
WittElem teichmuller(const FqElem &a, const WittRingPtr &ring);

/// Hensel root of f given a simple residue root (f, f' evaluated via callback).
WittElem hensel_root(const WittRingPtr &ring,
                     const std::vector<WittElem> &poly_coeffs, // lowest first
                     const FqElem &residue_root);

} // namespace swt

#endif
