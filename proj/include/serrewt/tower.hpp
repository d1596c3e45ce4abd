#ifndef SERREWT_TOWER_HPP_
#define SERREWT_TOWER_HPP_

#include <map>
#include <optional>

#include "serrewt/rat.hpp"
#include "serrewt/series.hpp"

namespace swt {

/* The tame tower M = L(pi) over K = Q_{p^f}: L/K unramified of degree g
   (prime to p), pi^e = u*p with e | p^f - 1 and u a unit of W(k).
   Elements are vectors (c_0..c_{e-1}) over W(l)/p^N representing
   sum c_j pi^j, with pi^e rewritten as u*p. */
struct TameTower {
    std::int64_t p = 0;
    int f = 0, g = 0, e = 0, N = 0;
    FqConfigPtr k_cfg; // residue field of K
    FqConfigPtr l_cfg; // residue field of M (and L)
    WittRingPtr W;     // W(l)/p^N
    WittElem u;        // pi^e = u * p
    FqElem zeta;       // canonical generator of mu_e(k), embedded into l
    std::vector<WittElem> zeta_pows; // Teichmueller lifts [zeta^t], t < e

    bool has_top = false;      // (p-1) | e, so the top digit level e*p/(p-1) exists
    int top_level = -1;
    FqElem top_inv_const;      // cbar^{-1} with [c] = delta^p / pi^(ep/(p-1))
    FqElem top_ref_digit;      // digit of the reference top unit (trace-class 1)

    std::vector<std::int64_t> ah_coeffs; // E_p coefficients mod p^N up to horizon

    int horizon() const { return e * N; }
    bool operator==(const TameTower &o) const {
        return p == o.p && f == o.f && g == o.g && e == o.e && N == o.N && u == o.u;
    }
};

using TowerPtr = std::shared_ptr<const TameTower>;

/// Builds the tower; `unit_coeffs` are integer coefficients of u in the W(l)
/// polynomial basis (naive lift, e.g. {-1} for u = -1).
TowerPtr tower_create(std::int64_t p, int f, int g, int e,
                      const std::vector<std::int64_t> &unit_coeffs, int N);

class LocalElem {
public:
    LocalElem() = default;
    LocalElem(TowerPtr t, std::vector<WittElem> coords);

    static LocalElem zero(const TowerPtr &t);
    static LocalElem one(const TowerPtr &t);
    static LocalElem from_witt(const TowerPtr &t, const WittElem &w);
    static LocalElem pi_power(const TowerPtr &t, int k); // k >= 0

    const TowerPtr &tower() const { return t_; }
    const std::vector<WittElem> &coords() const { return c_; }

    bool is_zero() const;
    /// pi-adic valuation, capped at the horizon e*N.
    int v_pi() const;

    friend LocalElem operator+(const LocalElem &a, const LocalElem &b);
    friend LocalElem operator-(const LocalElem &a, const LocalElem &b);
    friend LocalElem operator*(const LocalElem &a, const LocalElem &b);
    LocalElem operator-() const;
    friend bool operator==(const LocalElem &a, const LocalElem &b);
    friend bool operator!=(const LocalElem &a, const LocalElem &b) { return !(a == b); }

    LocalElem pow(std::int64_t k) const;
    LocalElem inverse() const; // unit required
    /// Divides by pi^k exactly (valuation must allow it).
    LocalElem div_pi(int k) const;
    /// Residue of a unit in l.
    FqElem residue() const;

private:
    TowerPtr t_;
    std::vector<WittElem> c_; // size e
};

/* Digit data of a class in M^x/(M^x)^p: levels prime to p up to e*p/(p-1)
   carry l-valued digits; when (p-1) | e the top level e*p/(p-1) carries a
   trace-class digit in F_p.  The Teichmueller part is always a p-th power
   (gcd(p, |l^x|) = 1) and is kept only for reconstruction. */
struct UnitDigits {
    std::map<int, FqElem> digits;
    std::int64_t top_trace = 0; // in F_p; meaningful only when tower has_top
    std::int64_t pi_exp = 0;    // full pi-valuation of the input
    FqElem teich;

    bool trivial_unit_part() const {
        return digits.empty() && top_trace == 0;
    }
};

/// E([a] pi^n) evaluated in the tower.
LocalElem ah_unit(const FqElem &a, int n, const TowerPtr &t);

/// Greedy digit decomposition of x != 0 modulo p-th powers.
UnitDigits decompose_unit(const LocalElem &x);

/// Reconstructs a representative from digit data (for round-trip checks).
LocalElem reconstruct(const UnitDigits &d, const TowerPtr &t);

/// True iff x is a p-th power in M^x.
bool is_pth_power(const LocalElem &x);

/// Element of Gal(M/K): Frobenius power s (mod g) on coefficients and
/// tame exponent t (mod e): pi -> [zeta^t] pi.
struct GalElem {
    int frob_power = 0;
    int tame_exp = 0;
};

LocalElem galois_apply(const GalElem &sigma, const LocalElem &x);

/// Lemma about eps_{alpha^p} o Frob = eps_{-p alpha}: checks that
/// E(beta^p) E(-p beta)^{-1} is a p-th power.  Requires
/// v_p(beta) > 1/(p(p-1)), i.e. v_pi(beta)*p*(p-1) > e.
bool verify_frobenius_shift(const LocalElem &beta);

/* Fixed enumeration of the F_p-coordinates of M^x/(M^x)^p:
   [pi-exponent] + [digit levels, each f*g coordinates] + [top trace]. */
struct DigitBasis {
    TowerPtr tower;
    std::vector<int> levels; // p-prime levels below the top, ascending
    int dim = 0;

    explicit DigitBasis(const TowerPtr &t);
    std::vector<std::int64_t> vector_of(const UnitDigits &d) const;
    /// The unit representing a given basis coordinate.
    LocalElem basis_unit(int index) const;
    /// Description of a coordinate (for diagnostics).
    std::string coord_name(int index) const;
};

/// Re-expresses x (over tower `from`) in the tower with uniformizer
/// pi' = s * pi, where s is a unit of W(l) and to->u == from->u * s^e.
LocalElem convert_uniformizer(const LocalElem &x, const TowerPtr &to, const WittElem &s_in_from);

/// Ring embedding W(l) -> W(l') for l' containing l.
WittElem witt_embed(const WittElem &w, const WittRingPtr &big);
/// Inverse of witt_embed on its image; throws if w is not in the image.
WittElem witt_restrict(const WittElem &w, const WittRingPtr &small);

/// Norm from M' = L'(pi) down to M = L(pi), both sharing e, u, N.
LocalElem norm_unramified(const LocalElem &x, const TowerPtr &small_tower);

} // namespace swt

#endif
