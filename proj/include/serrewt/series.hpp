#ifndef SERREWT_SERIES_HPP_
#define SERREWT_SERIES_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "serrewt/witt.hpp"

namespace swt {

using BigRat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/* Power series over W(l)/p^N truncated at x^M.  Units are exactly the series
   with unit constant term. */
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(WittRingPtr ring, int M);
    TruncSeries(WittRingPtr ring, int M, std::vector<WittElem> coeffs);

    static TruncSeries one(const WittRingPtr &r, int M);

    const WittRingPtr &ring() const { return ring_; }
    int xprec() const { return M_; }
    const WittElem &coeff(int k) const { return c_[size_t(k)]; }
    void set_coeff(int k, const WittElem &v) { c_[size_t(k)] = v; }

    friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);
    friend bool operator==(const TruncSeries &a, const TruncSeries &b);

    TruncSeries inverse() const; // unit constant term required
    TruncSeries pow(std::int64_t k) const;
    /// Substitute x -> c * x^k.
    TruncSeries scale_power(const WittElem &c, int k) const;
    /// True iff a == b coefficientwise mod p^n (up to x-precision).
    bool congruent(const TruncSeries &b, int n) const;
    /// First x-degree where the two differ mod p^n, or -1 if congruent.
    int first_difference(const TruncSeries &b, int n) const;

private:
    WittRingPtr ring_;
    int M_ = 0;
    std::vector<WittElem> c_;
};

/// Coefficients of E_p(x) = exp(sum_n x^(p^n)/p^n) as exact rationals, length M.
/// Every denominator is prime to p (checked; PrecisionLoss otherwise).
std::vector<BigRat> artin_hasse_rational(std::int64_t p, int M);

/// E_p(x) reduced into W(l)/p^N (scalar coefficients).
TruncSeries artin_hasse(const WittRingPtr &ring, int M);

/// exp(c * x^k) for c with val_p(c) >= 1 (p odd) so coefficients are integral.
/// Internally uses extra precision to absorb the factorial divisions; the
/// result is exact mod p^N as long as the ring has headroom_hint extra digits.
TruncSeries exp_term(const WittElem &c, int k, int M);

/// Reduce a rational with p-free denominator into Z/p^N.
std::int64_t rat_mod_pn(const BigRat &r, std::int64_t p, std::int64_t pN);

} // namespace swt

#endif
