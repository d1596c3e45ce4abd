#include "serrewt/cohomology.hpp"

#include "serrewt/linalg.hpp"

namespace swt {

namespace {

std::vector<std::vector<std::int64_t>> galois_digit_matrix(const DigitBasis &basis, const GalElem &sigma) {
    std::vector<std::vector<std::int64_t>> mat;
    for (int j = 0; j < basis.dim; ++j) {
        LocalElem img = galois_apply(sigma, basis.basis_unit(j));
        mat.push_back(basis.vector_of(decompose_unit(img)));
    }
    // stored column-major: mat[j][k] = coefficient of basis_k in sigma(basis_j)
    return mat;
}

} // namespace

BasisData basis_data(const GaloisCharData &chi, const TowerPtr &tower, const FqConfigPtr &ambient) {
    const TameSignature &sig = chi.sig;
    if (sig.p != tower->p || sig.f != tower->f)
        throw SwtError("basis_data: signature and tower disagree");
    const int f = sig.f;
    const std::int64_t q1 = sig.pf1();
    if (ambient->m % tower->l_cfg->m != 0)
        throw SwtError("basis_data: ambient field does not contain l");
    // chi must die on G_M: inertial order divides e, mu order divides g
    if (sig.n(0) % (q1 / tower->e) != 0)
        throw TowerTooSmall("inertial part of chi does not factor through the tower");
    if (!chi.mu_trivial && tower->g % chi.mu_order != 0)
        throw TowerTooSmall("unramified part of chi does not factor through Gal(L/K)");

    BasisData bd(tower);
    bd.chi = chi;
    bd.tower = tower;
    bd.ambient = ambient;
    bd.has_triv = chi.is_trivial();
    bd.has_cyc = chi.is_cyclotomic();

    FqElem mu_val = FqElem::one(ambient);
    if (!chi.mu_trivial) {
        mu_val = (*chi.mu_value.config() == *ambient) ? chi.mu_value : embed(chi.mu_value, ambient);
    }
    bd.chi_frob = mu_val;

    for (int i = 0; i < f; ++i) {
        auto [tp, np] = basis_level(sig, tower->e, i);
        if (np <= 0) throw SwtError("basis_data: n_i' must be positive (internal)");
        bd.tauprime.push_back(tp);
        bd.nprime.push_back(int(np));
    }

    // chi at the tame generator, computed from each i and checked consistent
    for (int i = 0; i < f; ++i) {
        FqElem v = embed(frobenius(tower->zeta, bd.tauprime[size_t(i)]), ambient).pow(bd.nprime[size_t(i)]);
        if (i == 0)
            bd.chi_tame = v;
        else if (!(v == bd.chi_tame))
            throw SwtError("basis_data: chi value inconsistent across indices (internal)");
    }

    // eigenvectors via embedding interpolation
    const int fg = tower->l_cfg->m;
    std::vector<std::vector<FqElem>> S(size_t(fg), std::vector<FqElem>(size_t(fg), FqElem::zero(ambient)));
    for (int s = 0; s < fg; ++s)
        for (int r = 0; r < fg; ++r) {
            std::vector<std::int64_t> c(size_t(fg), 0);
            c[size_t(r)] = 1;
            S[size_t(s)][size_t(r)] = embed(frobenius(FqElem(tower->l_cfg, c), s), ambient);
        }
    for (int i = 0; i < f; ++i) {
        std::vector<FqElem> w(size_t(fg), FqElem::zero(ambient));
        FqElem mupow = FqElem::one(ambient);
        for (int t = 0; t < tower->g; ++t) {
            w[size_t(bd.tauprime[size_t(i)] + f * t)] = mupow;
            mupow = mupow * mu_val;
        }
        bd.lambda.push_back(fq_solve(S, w, ambient));
    }

    bd.gal_tame = galois_digit_matrix(bd.basis, GalElem{0, 1});
    if (tower->g > 1) bd.gal_frob = galois_digit_matrix(bd.basis, GalElem{1, 0});
    return bd;
}

std::vector<FqElem> u_vector(const BasisData &bd, int which) {
    const int f = bd.chi.sig.f;
    std::vector<FqElem> v(size_t(bd.basis.dim), FqElem::zero(bd.ambient));
    if (which < f) {
        // locate the block of level nprime[which]
        int off = 1;
        for (int lv : bd.basis.levels) {
            if (lv == bd.nprime[size_t(which)]) {
                for (int r = 0; r < bd.tower->l_cfg->m; ++r)
                    v[size_t(off + r)] = bd.lambda[size_t(which)][size_t(r)];
                return v;
            }
            off += bd.tower->l_cfg->m;
        }
        throw SwtError("u_vector: level not present in the digit basis");
    }
    int idx = which - f;
    if (bd.has_triv && idx == 0) {
        v[0] = FqElem::one(bd.ambient);
        return v;
    }
    if (bd.has_cyc && idx == (bd.has_triv ? 1 : 0)) {
        if (!bd.tower->has_top) throw SwtError("u_vector: tower has no top level");
        v[size_t(bd.basis.dim - 1)] = FqElem::one(bd.ambient);
        return v;
    }
    throw SwtError("u_vector: index out of range");
}

std::vector<std::vector<FqElem>> equivariant_functionals(
    const BasisData &bd, const std::vector<std::vector<std::int64_t>> &extra_rows) {
    const FqConfigPtr &A = bd.ambient;
    const int D = bd.basis.dim;
    std::vector<std::vector<FqElem>> sys;
    auto add_equivariance = [&](const std::vector<std::vector<std::int64_t>> &G, const FqElem &chival) {
        for (int j = 0; j < D; ++j) {
            std::vector<FqElem> row(size_t(D), FqElem::zero(A));
            for (int k = 0; k < D; ++k)
                if (G[size_t(j)][size_t(k)] != 0)
                    row[size_t(k)] = row[size_t(k)] + FqElem::from_int(A, G[size_t(j)][size_t(k)]);
            row[size_t(j)] = row[size_t(j)] - chival;
            sys.push_back(std::move(row));
        }
    };
    add_equivariance(bd.gal_tame, bd.chi_tame);
    if (bd.tower->g > 1) add_equivariance(bd.gal_frob, bd.chi_frob);
    for (const auto &r : extra_rows) {
        std::vector<FqElem> row(size_t(D), FqElem::zero(A));
        for (int k = 0; k < D; ++k)
            if (r[size_t(k)] != 0) row[size_t(k)] = FqElem::from_int(A, r[size_t(k)]);
        sys.push_back(std::move(row));
    }
    return fq_kernel(sys, A, D);
}

std::vector<std::vector<FqElem>> dual_basis_functionals(const BasisData &bd) {
    auto psis = equivariant_functionals(bd, {});
    const int dim = bd.class_dim();
    if (int(psis.size()) != dim)
        throw SwtError("dual_basis: equivariant space has dimension " + std::to_string(psis.size()) +
                       ", expected " + std::to_string(dim));
    // pairing matrix P[r][j] = psi_r(u_j)
    std::vector<std::vector<FqElem>> P(size_t(dim), std::vector<FqElem>(size_t(dim), FqElem::zero(bd.ambient)));
    for (int r = 0; r < dim; ++r)
        for (int j = 0; j < dim; ++j) {
            auto uj = u_vector(bd, j);
            FqElem acc = FqElem::zero(bd.ambient);
            for (int k = 0; k < bd.basis.dim; ++k) acc = acc + psis[size_t(r)][size_t(k)] * uj[size_t(k)];
            P[size_t(r)][size_t(j)] = acc;
        }
    // dual_j = sum_r Y[j][r] psi_r with Y = P^{-1}
    std::vector<std::vector<FqElem>> duals;
    for (int j = 0; j < dim; ++j) {
        std::vector<FqElem> e(size_t(dim), FqElem::zero(bd.ambient));
        e[size_t(j)] = FqElem::one(bd.ambient);
        // solve P^T y = e  (so that sum_r y_r P[r][k] = delta_jk)
        std::vector<std::vector<FqElem>> Pt(size_t(dim), std::vector<FqElem>(size_t(dim), FqElem::zero(bd.ambient)));
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) Pt[size_t(r)][size_t(c)] = P[size_t(c)][size_t(r)];
        auto y = fq_solve(Pt, e, bd.ambient);
        std::vector<FqElem> row(size_t(bd.basis.dim), FqElem::zero(bd.ambient));
        for (int r = 0; r < dim; ++r)
            for (int k = 0; k < bd.basis.dim; ++k)
                row[size_t(k)] = row[size_t(k)] + y[size_t(r)] * psis[size_t(r)][size_t(k)];
        duals.push_back(std::move(row));
    }
    return duals;
}

bool ClassVector::is_zero() const {
    for (const auto &x : tau)
        if (!x.is_zero()) return false;
    if (has_triv && !un.is_zero()) return false;
    if (has_cyc && !cyc.is_zero()) return false;
    return true;
}

std::set<int> ClassVector::tau_support() const {
    std::set<int> s;
    for (int i = 0; i < f; ++i)
        if (!tau[size_t(i)].is_zero()) s.insert(i);
    return s;
}

ClassVector class_from_functional(const BasisData &bd, const std::vector<FqElem> &phi) {
    ClassVector cv;
    cv.f = bd.chi.sig.f;
    cv.has_triv = bd.has_triv;
    cv.has_cyc = bd.has_cyc;
    cv.un = FqElem::zero(bd.ambient);
    cv.cyc = FqElem::zero(bd.ambient);
    auto pair_with = [&](int which) {
        auto u = u_vector(bd, which);
        FqElem acc = FqElem::zero(bd.ambient);
        for (int k = 0; k < bd.basis.dim; ++k) acc = acc + phi[size_t(k)] * u[size_t(k)];
        return acc;
    };
    for (int i = 0; i < cv.f; ++i) cv.tau.push_back(pair_with(i));
    int extra = cv.f;
    if (bd.has_triv) cv.un = pair_with(extra++);
    if (bd.has_cyc) cv.cyc = pair_with(extra++);
    return cv;
}

ClassVector class_from_norm_subgroup(const NormSubgroup &ns, const BasisData &bd) {
    const std::int64_t p = bd.chi.sig.p;
    std::int64_t want = 1;
    for (int i = 0; i < bd.chi.sig.f; ++i) want *= p;
    if (ns.index != want)
        throw IndexMismatch("norm subgroup has index " + std::to_string(ns.index) +
                            ", expected p^f = " + std::to_string(want));
    auto kernel = equivariant_functionals(bd, ns.rows.rows());
    if (kernel.size() != 1)
        throw AmbiguousKernel("functional space has dimension " + std::to_string(kernel.size()));
    return class_from_functional(bd, kernel[0]);
}

FqElem evaluate_dual(const BasisData &bd, int i, const FqElem &a, int n) {
    const int f = bd.chi.sig.f;
    bool is_level = false;
    for (int j = 0; j < f; ++j)
        if (bd.nprime[size_t(j)] == n) is_level = true;
    if (!is_level) throw LevelMismatch("level " + std::to_string(n) + " carries no basis class");
    if (bd.nprime[size_t(i)] != n) return FqElem::zero(bd.ambient);
    // sum over Gal(l/k): mu^{-t} tau~_i(Frob_K^t(a)^p)
    FqElem acc = FqElem::zero(bd.ambient);
    FqElem muinv = bd.chi_frob.inverse();
    FqElem mupow = FqElem::one(bd.ambient);
    for (int t = 0; t < bd.tower->g; ++t) {
        acc = acc + mupow * embed(frobenius(a, i + bd.chi.sig.f * t + 1), bd.ambient);
        mupow = mupow * muinv;
    }
    return acc;
}

FiltrationDegree filtration_degree(const ClassVector &cv, const BasisData &bd) {
    FiltrationDegree out;
    if (cv.is_zero()) {
        out.zero = true;
        return out;
    }
    const std::int64_t p = bd.chi.sig.p;
    Rat best(0);
    bool any = false;
    auto update = [&](const Rat &s) {
        if (!any || best < s) best = s;
        any = true;
    };
    if (cv.has_triv && !cv.un.is_zero()) update(Rat(0));
    for (int i = 0; i < cv.f; ++i)
        if (!cv.tau[size_t(i)].is_zero())
            update(Rat(1) + Rat(bd.nprime[size_t(i)], bd.tower->e));
    if (cv.has_cyc && !cv.cyc.is_zero()) update(Rat(1) + Rat(p, p - 1));
    out.s = best;
    return out;
}

bool in_lv_ah(const ClassVector &cv, const LvDescriptor &d) {
    if (cv.f != d.f) throw BasisMismatch("descriptor and class have different f");
    if (d.full_space) return true;
    if (cv.has_cyc && !cv.cyc.is_zero()) return false;
    if (cv.has_triv && !cv.un.is_zero() && !d.include_unramified) return false;
    for (int i = 0; i < cv.f; ++i)
        if (!cv.tau[size_t(i)].is_zero() && !((d.index_set >> i) & 1u)) return false;
    return true;
}

SymbolicClass symbolic_of(const ClassVector &cv) {
    SymbolicClass s;
    s.tau_support = cv.tau_support();
    s.un_support = cv.has_triv && !cv.un.is_zero();
    s.tr_support = cv.has_cyc && !cv.cyc.is_zero();
    return s;
}

} // namespace swt
