#ifndef SERREWT_WEIGHTS_HPP_
#define SERREWT_WEIGHTS_HPP_

#include <functional>
#include <optional>
#include <string>

#include "serrewt/signature.hpp"

namespace swt {

/* V_{d,b}: twist vector d (0 <= d_i <= p-1, not all p-1) and symmetric power
   vector b (1 <= b_i <= p).  d only matters through sum d_i p^i mod p^f-1 and
   is kept in canonical digit form. */
struct SerreWeight {
    std::int64_t p = 0;
    int f = 0;
    std::vector<int> d, b;

    SerreWeight() = default;
    SerreWeight(std::int64_t p_, int f_, const std::vector<int> &d_, std::vector<int> b_);

    std::int64_t d_exponent() const; // sum d_i p^i mod p^f - 1, canonical
    SerreWeight twisted(std::int64_t t) const; // d-exponent shifted by t
    std::string str() const; // "[d0,d1;b0,b1]"

    friend bool operator==(const SerreWeight &x, const SerreWeight &y) {
        return x.p == y.p && x.f == y.f && x.d == y.d && x.b == y.b;
    }
    friend bool operator<(const SerreWeight &x, const SerreWeight &y) {
        return std::tie(x.d, x.b) < std::tie(y.d, y.b);
    }
};

struct WeightPair {
    SerreWeight V;
    Subset J = 0;
};

/* All (V, J) with chi1|I = prod omega^d * prod_{J} omega^b and
   chi2|I = prod omega^d * prod_{not J} omega^b. */
std::vector<WeightPair> weight_pairs(const GaloisCharData &chi1, const GaloisCharData &chi2);

/// The J's paired with V.
std::vector<Subset> s_v(const SerreWeight &V, const std::vector<WeightPair> &pairs);

/// The distinguished member of s_v (two defining conditions); empty optional
/// when V occurs in no pair.
std::optional<Subset> j_max(const SerreWeight &V, const GaloisCharData &chi1,
                            const GaloisCharData &chi2);

/* Description of the subspace attached to a weight: span of {c_tau : tau in
   index_set}, plus c_un when the ratio character is trivial, or everything
   when full_space is set. */
struct LvDescriptor {
    int f = 0;
    Subset index_set = 0;
    bool include_unramified = false;
    bool full_space = false;
};

LvDescriptor lv_ah_descriptor(const SerreWeight &V, const GaloisCharData &chi1,
                              const GaloisCharData &chi2);

using MembershipOracle = std::function<bool(const LvDescriptor &)>;

/// The weight set {V : (V,J) in W' for some J, class lies in the V-subspace}.
std::vector<SerreWeight> weights_reducible(const GaloisCharData &chi1,
                                           const GaloisCharData &chi2,
                                           const MembershipOracle &oracle);

/* Symbolic extension classes, described by the support of their coordinates
   in the dual basis.  zero = empty support; a generic class is supported
   everywhere. */
struct SymbolicClass {
    std::set<int> tau_support;
    bool un_support = false;
    bool tr_support = false;

    static SymbolicClass zero() { return {}; }
    static SymbolicClass generic(const GaloisCharData &chi_ratio);
};

MembershipOracle oracle_for(const SymbolicClass &cls);

/// Irreducible case: rho|_I ~ diag(psi^A, psi^(p^f A)) for the niveau-2f
/// fundamental character psi; A must not vanish mod p^f + 1.
std::vector<SerreWeight> weights_irreducible(std::int64_t p, int f, std::int64_t A);

enum class QpClassKind { NonSplit, Split, PeuRamifiee, NotPeuRamifiee };

/// The classical K = Q_p table, an independent cross-check of
/// weights_reducible at f = 1.  chi|_I = omega^a, mu_trivial tells whether
/// the full character equals omega^a.
std::vector<SerreWeight> weights_qp(std::int64_t p, int a, bool mu_trivial, QpClassKind kind);

std::string weight_set_str(const std::vector<SerreWeight> &ws);

} // namespace swt

#endif
