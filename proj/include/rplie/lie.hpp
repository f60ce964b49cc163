#pragma once

#include <string>
#include <vector>

#include "rplie/linalg.hpp"

namespace rplie {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c_{ij}^k e_k. The constructor enforces antisymmetry;
/// the Jacobi identity is checked separately by jacobi().
class LieAlgebra {
public:
    explicit LieAlgebra(int dim);

    int dim() const { return n_; }
    const Scalar& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }

    /// Sets [e_i, e_j] and, by antisymmetry, [e_j, e_i]. Indices 0-based.
    void set_bracket(int i, int j, const Vec& value);
    void add_bracket_term(int i, int j, int k, const Scalar& coef);

    Vec bracket(const Vec& u, const Vec& v) const;
    /// Matrix of ad_u : v -> [u, v].
    Mat ad(const Vec& u) const;
    /// Matrix of the coadjoint action on the dual basis: coad(u) = -ad(u)^T.
    Mat coad(const Vec& u) const;

    Vec basis_vector(int i) const;
    /// Echelonized basis of the derived ideal span{[e_i, e_j]}.
    Mat derived_ideal() const;
    bool is_abelian() const;

private:
    int n_;
    Vec c_;
    size_t idx(int i, int j, int k) const { return (size_t(i) * n_ + j) * n_ + k; }
};

struct JacobiViolation {
    int i, j, k, l;
    Scalar residual;
};

struct JacobiReport {
    bool holds = true;
    std::vector<JacobiViolation> violations;
};

JacobiReport jacobi(const LieAlgebra& g);

/// Totally antisymmetric 3-tensor; holds the bracket [r, r] of a bivector.
class Trivector {
public:
    explicit Trivector(int dim);
    int dim() const { return n_; }
    const Scalar& at(int i, int j, int k) const { return t_[idx(i, j, k)]; }
    void set(int i, int j, int k, const Scalar& v);  // writes all 6 permutations
    bool is_zero() const;

private:
    int n_;
    Vec t_;
    size_t idx(int i, int j, int k) const { return (size_t(i) * n_ + j) * n_ + k; }
};

/// Antisymmetric bivector r = sum_{i<j} r^{ij} e_i ^ e_j.
class Bivector {
public:
    explicit Bivector(int dim) : m_(dim, dim) {}
    explicit Bivector(Mat antisym);

    int dim() const { return m_.rows(); }
    const Mat& matrix() const { return m_; }
    void set(int i, int j, const Scalar& v);
    const Scalar& at(int i, int j) const { return m_.at(i, j); }

    /// r(alpha, beta) for covectors in dual-basis coordinates.
    Scalar eval(const Vec& alpha, const Vec& beta) const;
    /// Matrix of the contraction r_# : g* -> g, pinned by the identity
    /// <beta, r_#(alpha)> = r(alpha, beta).
    Mat sharp_matrix() const;

private:
    Mat m_;
};

Trivector yang_baxter_bracket(const LieAlgebra& g, const Bivector& r);

/// The bracket [a,b]_r = coad_{r_#(a)} b - coad_{r_#(b)} a on the dual space,
/// returned as structure constants over the dual basis.
LieAlgebra koszul_dual(const LieAlgebra& g, const Bivector& r);

/// Residual of r_#([a,b]_r) - [r_#(a), r_#(b)] on basis pairs; zero when the
/// Yang-Baxter bracket vanishes.
Mat morphism_residual(const LieAlgebra& g, const Bivector& r, int i, int j);

/// Symmetric positive-definite scalar product.
class Metric {
public:
    explicit Metric(Mat gram);
    static Metric identity(int n);

    int dim() const { return g_.rows(); }
    const Mat& matrix() const { return g_; }
    const Mat& inverse_matrix() const { return inv_; }

    Scalar eval(const Vec& u, const Vec& v) const;
    /// Metric on the dual space (the inverse Gram matrix).
    Metric dual() const;
    /// Index-raising isomorphism g* -> g; matrix is the inverse Gram matrix.
    Mat sharp_matrix() const { return inv_; }
    bool is_biinvariant(const LieAlgebra& g) const;

private:
    Mat g_, inv_;
};

}  // namespace rplie
