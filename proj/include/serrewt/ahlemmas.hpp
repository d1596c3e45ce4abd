#ifndef SERREWT_AHLEMMAS_HPP_
#define SERREWT_AHLEMMAS_HPP_

#include <string>
#include <vector>

#include "serrewt/series.hpp"

namespace swt {

struct VerificationWitness {
    bool pass = false;
    int fail_degree = -1; // first offending x-degree when pass == false
    std::string detail;
    std::vector<WittElem> witness_coeffs;

    void check() const {
        if (!pass) throw IdentityFailed(detail);
    }
};

/// delta_0 = ([a]+[b]-[a+b])/p, delta_n = (phi^n(delta_0) - sum p^i delta_i^(p^(n-i)))/p^n.
/// Every division is checked exact.  The ring must carry at least n_max extra
/// digits of precision beyond what the caller intends to use of delta_n.
std::vector<WittElem> ah_delta_sequence(const FqElem &a, const FqElem &b,
                                        const WittRingPtr &ring, int n_max);

/// Checks f(x)^p * E([a+b]x) = E([a]x) * E([b]x) mod (p^N, x^M) with
/// f(x) = prod_i E(delta_i x^(p^i)).
VerificationWitness verify_ah_multiplicativity(const FqElem &a, const FqElem &b, int N, int M);

/// Checks E(x) E((1+p d)x)^{-1} prod_m E(p d x^(p^m))  =  (prod_n exp(c_n x^(p^n)))^p
/// mod (p^N, x^M) with c_n = (b_n - a_n)/p as in the construction.
/// `delta_res` is the residue of d; d = [delta_res] Teichmueller.
VerificationWitness verify_ah_scaling(const FqElem &delta_res, int N, int M);

} // namespace swt

#endif
