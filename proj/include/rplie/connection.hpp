#pragma once

#include "rplie/lie.hpp"

namespace rplie {

/// The torsionless metric product A of a metric Lie algebra, stored as
/// A_{e_i} e_j = sum_k a_{ij}^k e_k.
class LeviCivitaProduct {
public:
    LeviCivitaProduct(int dim) : n_(dim), a_(size_t(dim) * dim * dim, Scalar(0)) {}

    int dim() const { return n_; }
    const Scalar& coef(int i, int j, int k) const { return a_[idx(i, j, k)]; }
    void set_coef(int i, int j, int k, const Scalar& v) { a_[idx(i, j, k)] = v; }

    Vec apply(const Vec& u, const Vec& v) const;
    /// Matrix of v -> A_u v.
    Mat operator_of(const Vec& u) const;

private:
    int n_;
    Vec a_;
    size_t idx(int i, int j, int k) const { return (size_t(i) * n_ + j) * n_ + k; }
};

/// Solves the Koszul systems 2 rho(A_u v, w) = rho([u,v],w) + rho([w,u],v)
/// + rho([w,v],u) on the basis. Defined for any antisymmetric bracket.
LeviCivitaProduct levi_civita(const LieAlgebra& g, const Metric& rho);

/// Residuals of the two defining identities; both zero for levi_civita output.
bool has_torsion_identity(const LieAlgebra& g, const LeviCivitaProduct& a);
bool has_metric_identity(const Metric& rho, const LeviCivitaProduct& a);

/// Curvature tensor R(e_i, e_j) e_k = sum_l curv_{ijk}^l e_l.
class Curvature {
public:
    explicit Curvature(int dim) : n_(dim), r_(size_t(dim) * dim * dim * dim, Scalar(0)) {}
    int dim() const { return n_; }
    Scalar& at(int i, int j, int k, int l) { return r_[idx(i, j, k, l)]; }
    const Scalar& at(int i, int j, int k, int l) const { return r_[idx(i, j, k, l)]; }
    bool is_zero() const;

private:
    int n_;
    Vec r_;
    size_t idx(int i, int j, int k, int l) const {
        return ((size_t(i) * n_ + j) * n_ + k) * n_ + l;
    }
};

Curvature curvature(const LieAlgebra& g, const LeviCivitaProduct& a);
bool is_flat(const LieAlgebra& g, const LeviCivitaProduct& a);

/// Structural flatness test: the derived ideal is even-dimensional abelian,
/// its orthocomplement is abelian and coincides with the set of vectors whose
/// adjoint map is skew-symmetric, and the two span the algebra.
struct FlatSplitReport {
    bool flat = false;
    bool derived_abelian = false;
    bool derived_even = false;
    bool complement_abelian = false;
    bool complement_is_skew_set = false;
    Mat derived_basis;      // rows
    Mat complement_basis;   // rows
};

FlatSplitReport milnor_flat_check(const LieAlgebra& g, const Metric& rho);

/// True iff omega(A_u v, w) + omega(v, A_u w) = 0 on all basis triples.
/// Throws std::invalid_argument when omega is degenerate.
bool kahler_check(const LieAlgebra& g, const Metric& rho, const Bivector& omega_form);

/// For a flat even-dimensional metric Lie algebra, builds a nondegenerate
/// 2-form omega with kahler_check(g, rho, omega) = true. Throws when the
/// algebra is not flat, the dimension is odd, or (rational mode) a rotation
/// weight is irrational.
Bivector flat_kahler_form(const LieAlgebra& g, const Metric& rho);

}  // namespace rplie
