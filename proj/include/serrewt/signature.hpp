#ifndef SERREWT_SIGNATURE_HPP_
#define SERREWT_SIGNATURE_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "serrewt/fq.hpp"
#include "serrewt/rat.hpp"

namespace swt {

/* The tame signature (a_0,...,a_{f-1}) of a character of I_K, an element of
   {1,...,p}^f minus the all-p vector.  Indices are read mod f throughout. */
struct TameSignature {
    std::int64_t p = 0;
    int f = 0;
    std::vector<int> a;

    TameSignature() = default;
    TameSignature(std::int64_t p_, int f_, std::vector<int> a_);

    int at(int i) const { return a[size_t(((i % f) + f) % f)]; }
    std::int64_t pf1() const; // p^f - 1
    /// n_i = sum_j a_{i+j} p^j
    std::int64_t n(int i) const;
    bool all_equal(int v) const;
    bool restriction_trivial() const { return all_equal(int(p) - 1); }
    bool restriction_cyclotomic() const { return all_equal(1); }
    /// Period under rotation (the absolute niveau).
    int period() const;
    bool generic() const; // all a_i < p
    TameSignature rotated(int k) const; // Frob^k . a
    bool operator==(const TameSignature &o) const { return p == o.p && f == o.f && a == o.a; }
};

/// The unique signature with n_0 = sum a_i p^i congruent to n mod p^f-1.
TameSignature signature_from_exponent(std::int64_t p, int f, std::int64_t n);

/* A character G_K -> F-bar_p^x: inertial part given by the signature, plus the
   unramified part mu (its value on Frob_K).  "Trivial"/"cyclotomic" refer to
   the character itself; the restriction-only flags live on the signature. */
struct GaloisCharData {
    TameSignature sig;
    bool mu_trivial = true;
    FqElem mu_value;   // used only when mu_trivial is false
    int mu_order = 1;

    bool is_trivial() const { return mu_trivial && sig.restriction_trivial(); }
    bool is_cyclotomic() const { return mu_trivial && sig.restriction_cyclotomic(); }
};

GaloisCharData char_from_signature(TameSignature sig);
GaloisCharData char_with_mu(TameSignature sig, const FqElem &mu_value);
/// chi1 * chi2^{-1}
GaloisCharData char_ratio(const GaloisCharData &chi1, const GaloisCharData &chi2);

/* Dimensions of the graded pieces of the ramification filtration on
   H^1(G_K, F-bar_p(chi)). */
struct FiltrationDims {
    std::map<Rat, int> jumps; // s -> dimension of gr^s
    bool trivial_contrib = false;
    bool cyclotomic_contrib = false;
    int total() const;
    int dim_up_to(const Rat &s, bool strict) const; // dim Fil^s (or Fil^{<s})
};

FiltrationDims filtration_dims(const GaloisCharData &chi);

struct SubspaceDims {
    int un = 0, gt = 0, fl = 0, cg = 0, ty = 0, h1 = 0;
};

SubspaceDims subspace_dims(const GaloisCharData &chi);

/* Subsets of Z/fZ are bitmasks: bit i set <=> [i] in J. */
using Subset = std::uint32_t;

/// All ordered dependent pairs ([i],[i+t]).
std::set<std::pair<int, int>> dependent_pairs(const TameSignature &sig);

/// J admissible <=> for every dependent pair ([j],[i]) with [i] in J, [j] in J.
bool is_admissible(const TameSignature &sig, Subset J);

/// The chain retraction on integer indices.
int delta_int(const TameSignature &sig, int j);
Subset delta_shift(const TameSignature &sig, Subset J);

/// mu(J): equals J when delta(J) is contained in J, otherwise the inductive
/// construction; verified independent of the choice of the starting index.
Subset mu_shift(const TameSignature &sig, Subset J);

int popcount(Subset s);
std::string subset_str(Subset J, int f);

/// (tau_i' as an index mod f, n_i') for a tower of ramification degree e:
/// when a_{i+1} != p these are (i+1, e n_{i+1}/(p^f-1)); otherwise the chain
/// rule applies with the first j > i with a_{j+1} != p-1.
std::pair<int, std::int64_t> basis_level(const TameSignature &sig, int e, int i);

} // namespace swt

#endif
