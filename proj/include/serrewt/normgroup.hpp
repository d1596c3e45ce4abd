#ifndef SERREWT_NORMGROUP_HPP_
#define SERREWT_NORMGROUP_HPP_

#include "serrewt/linalg.hpp"
#include "serrewt/tower.hpp"

namespace swt {

/* N = M[x]/(g) for a monic degree-D polynomial g over O_M.  The pipeline
   expects D = p^f and N/M totally ramified; the root valuation is read off
   the Newton polygon. */
struct WildExtension {
    TowerPtr tower;
    std::vector<LocalElem> g; // monic, length D+1, lowest degree first
    int D = 0;
    bool eisenstein = false;
    int v_theta = 0;       // v_N(theta) with v_N(pi) = D
    int unif_a = 0, unif_b = 0; // pi_N = theta^a * pi^b, a*v_theta + b*D = 1
};

WildExtension wild_extension(const TowerPtr &tower, std::vector<LocalElem> g);

/// Norm of h(theta) for deg h < D: determinant of multiplication by h on
/// M[x]/(g).  The optional pi_shift returns norm(pi^k h) = pi^(Dk) norm(h)
/// bookkeeping to the caller.
LocalElem norm_element(const WildExtension &ext, const std::vector<LocalElem> &h);

struct NormSubgroup {
    DigitBasis basis;
    FpRowSpace rows;
    std::int64_t index = 0; // [digit space : row space] = p^(dim - rank)

    NormSubgroup(const TowerPtr &t) : basis(t), rows(t->p, basis.dim) {}
};

/// Digit row space spanned by norms of a generating family of N^x:
/// theta + c over residue representatives, one-units of N at all levels up to
/// e_N p/(p-1) built on the synthesized uniformizer, Teichmueller lifts and
/// theta itself.
NormSubgroup norm_subgroup(const WildExtension &ext, int level_bound = -1);

/// Membership of the digit class of x in the row space.
bool norm_contains(const NormSubgroup &ns, const LocalElem &x);
bool norm_contains(const NormSubgroup &ns, const UnitDigits &d);

/// The row space is Gal(M/K)-stable (the reciprocity kernel must be).
bool galois_stable(const NormSubgroup &ns);

} // namespace swt

#endif
