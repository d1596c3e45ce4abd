#ifndef SERREWT_COHOMOLOGY_HPP_
#define SERREWT_COHOMOLOGY_HPP_

#include "serrewt/normgroup.hpp"
#include "serrewt/weights.hpp"

namespace swt {

/* Basis data for U_chi over a chosen tower: levels n_i', embedding indices
   tau_i', eigenvector coordinates, the extra classes for trivial/cyclotomic
   chi, and the Galois matrices on the digit space. */
struct BasisData {
    GaloisCharData chi;
    TowerPtr tower;
    FqConfigPtr ambient;
    DigitBasis basis;

    std::vector<int> nprime;   // n_i' > 0
    std::vector<int> tauprime; // tau_i' as an index mod f
    // lambda[i][r]: ambient coefficient of the r-th F_p-basis element of l in
    // the (tau_i', mu)-eigenvector
    std::vector<std::vector<FqElem>> lambda;
    bool has_triv = false, has_cyc = false;
    FqElem chi_tame; // chi at the canonical tame generator
    FqElem chi_frob; // chi at the Frobenius lift (mu value), used when g > 1
    std::vector<std::vector<std::int64_t>> gal_tame, gal_frob; // digit-space action

    explicit BasisData(const TowerPtr &t) : basis(t) {}
    int class_dim() const { return chi.sig.f + (has_triv ? 1 : 0) + (has_cyc ? 1 : 0); }
};

/// Builds basis data; TowerTooSmall when chi does not die on G_M.
BasisData basis_data(const GaloisCharData &chi, const TowerPtr &tower, const FqConfigPtr &ambient);

/// The A-valued digit vector of u_i (0 <= i < f), of u_triv (i = f when
/// trivial) and u_cyc (last index when cyclotomic).
std::vector<FqElem> u_vector(const BasisData &bd, int which);

/// Spanning set of the chi-equivariant functionals on the digit space that
/// kill the given F_p rows; each functional is an ambient-valued row vector.
std::vector<std::vector<FqElem>> equivariant_functionals(
    const BasisData &bd, const std::vector<std::vector<std::int64_t>> &extra_rows);

/// The dual basis {c_tau_i} (+ c_un, c_tr) as functionals on the digit space.
/// Also certifies that the u's form a basis (pairing matrix invertible).
std::vector<std::vector<FqElem>> dual_basis_functionals(const BasisData &bd);

/* Coordinates of a cohomology class in the dual basis, defined up to scalar. */
struct ClassVector {
    int f = 0;
    bool has_triv = false, has_cyc = false;
    std::vector<FqElem> tau;
    FqElem un, cyc;
    bool up_to_scalar = true;

    bool is_zero() const;
    std::set<int> tau_support() const;
};

/// Extracts the class cut out by a norm subgroup of index p^f.
ClassVector class_from_norm_subgroup(const NormSubgroup &ns, const BasisData &bd);

/// Coordinates of an explicit functional (ambient row over digit coordinates).
ClassVector class_from_functional(const BasisData &bd, const std::vector<FqElem> &phi);

/// The displayed character sum sum_g mu^{-1}(g) tau~_i(g(a^p)); zero when n is
/// a different basis level, LevelMismatch when n is no basis level at all.
FqElem evaluate_dual(const BasisData &bd, int i, const FqElem &a, int n);

struct FiltrationDegree {
    bool zero = false;
    Rat s;
};

/// Least s with the class in Fil^s, from the support of the coordinates.
FiltrationDegree filtration_degree(const ClassVector &cv, const BasisData &bd);

/// Membership in the subspace described by an LvDescriptor.
bool in_lv_ah(const ClassVector &cv, const LvDescriptor &d);

/// Symbolic view of a computed class (support sets), usable with oracle_for.
SymbolicClass symbolic_of(const ClassVector &cv);

} // namespace swt

#endif
