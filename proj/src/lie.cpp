#include "rplie/lie.hpp"

#include <stdexcept>

namespace rplie {

LieAlgebra::LieAlgebra(int dim) : n_(dim), c_(size_t(dim) * dim * dim, Scalar(0)) {
    if (dim <= 0) throw std::invalid_argument("lie algebra: dimension must be positive");
}

void LieAlgebra::set_bracket(int i, int j, const Vec& value) {
    if (int(value.size()) != n_) throw std::invalid_argument("set_bracket: bad vector size");
    if (i == j) {
        if (!rplie::is_zero(value)) throw std::invalid_argument("set_bracket: [x,x] must vanish");
        return;
    }
    for (int k = 0; k < n_; ++k) {
        c_[idx(i, j, k)] = value[k];
        c_[idx(j, i, k)] = -value[k];
    }
}

void LieAlgebra::add_bracket_term(int i, int j, int k, const Scalar& coef) {
    if (i == j) throw std::invalid_argument("add_bracket_term: i == j");
    c_[idx(i, j, k)] += coef;
    c_[idx(j, i, k)] -= coef;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    if (int(u.size()) != n_ || int(v.size()) != n_)
        throw std::invalid_argument("bracket: dimension mismatch");
    Vec w(n_, Scalar(0));
    for (int i = 0; i < n_; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (v[j].is_zero()) continue;
            Scalar f = u[i] * v[j];
            for (int k = 0; k < n_; ++k) w[k] += f * c(i, j, k);
        }
    }
    return w;
}

Mat LieAlgebra::ad(const Vec& u) const {
    if (int(u.size()) != n_) throw std::invalid_argument("ad: dimension mismatch");
    Mat m(n_, n_);
    for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
            Scalar s(0);
            for (int i = 0; i < n_; ++i) s += u[i] * c(i, j, k);
            m.at(k, j) = s;
        }
    return m;
}

Mat LieAlgebra::coad(const Vec& u) const { return -ad(u).transpose(); }

Vec LieAlgebra::basis_vector(int i) const {
    Vec v(n_, Scalar(0));
    v[i] = Scalar(1);
    return v;
}

Mat LieAlgebra::derived_ideal() const {
    std::vector<Vec> gens;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            Vec b(n_);
            for (int k = 0; k < n_; ++k) b[k] = c(i, j, k);
            if (!rplie::is_zero(b)) gens.push_back(b);
        }
    if (gens.empty()) return Mat(0, n_);
    return row_space(Mat::from_rows(gens, n_));
}

bool LieAlgebra::is_abelian() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

JacobiReport jacobi(const LieAlgebra& g) {
    JacobiReport rep;
    int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Scalar s(0);
                    for (int m = 0; m < n; ++m) {
                        s += g.c(i, j, m) * g.c(m, k, l);
                        s += g.c(j, k, m) * g.c(m, i, l);
                        s += g.c(k, i, m) * g.c(m, j, l);
                    }
                    if (!s.is_zero()) {
                        rep.holds = false;
                        rep.violations.push_back({i, j, k, l, s});
                    }
                }
    return rep;
}

Trivector::Trivector(int dim) : n_(dim), t_(size_t(dim) * dim * dim, Scalar(0)) {}

void Trivector::set(int i, int j, int k, const Scalar& v) {
    t_[idx(i, j, k)] = v;
    t_[idx(j, k, i)] = v;
    t_[idx(k, i, j)] = v;
    t_[idx(j, i, k)] = -v;
    t_[idx(i, k, j)] = -v;
    t_[idx(k, j, i)] = -v;
}

bool Trivector::is_zero() const {
    for (const auto& x : t_)
        if (!x.is_zero()) return false;
    return true;
}

Bivector::Bivector(Mat antisym) : m_(std::move(antisym)) {
    if (!m_.is_antisymmetric()) throw std::invalid_argument("bivector: matrix not antisymmetric");
}

void Bivector::set(int i, int j, const Scalar& v) {
    if (i == j && !v.is_zero()) throw std::invalid_argument("bivector: nonzero diagonal");
    m_.at(i, j) = v;
    m_.at(j, i) = -v;
}

Scalar Bivector::eval(const Vec& alpha, const Vec& beta) const {
    return dot(alpha, m_ * beta);
}

Mat Bivector::sharp_matrix() const { return m_.transpose(); }

Trivector yang_baxter_bracket(const LieAlgebra& g, const Bivector& r) {
    int n = g.dim();
    if (r.dim() != n) throw std::invalid_argument("yang_baxter_bracket: dimension mismatch");
    Mat sharp = r.sharp_matrix();
    Trivector t(n);
    for (int i = 0; i < n; ++i) {
        Vec si = sharp.col(i);
        for (int j = i + 1; j < n; ++j) {
            Vec sj = sharp.col(j);
            for (int k = j + 1; k < n; ++k) {
                Vec sk = sharp.col(k);
                Scalar v = g.bracket(sj, sk)[i] + g.bracket(sk, si)[j] + g.bracket(si, sj)[k];
                t.set(i, j, k, v);
            }
        }
    }
    return t;
}

LieAlgebra koszul_dual(const LieAlgebra& g, const Bivector& r) {
    int n = g.dim();
    if (r.dim() != n) throw std::invalid_argument("koszul_dual: dimension mismatch");
    Mat sharp = r.sharp_matrix();
    LieAlgebra dual(n);
    for (int i = 0; i < n; ++i) {
        Mat coad_i = g.coad(sharp.col(i));
        for (int j = i + 1; j < n; ++j) {
            Mat coad_j = g.coad(sharp.col(j));
            Vec b = coad_i.col(j) - coad_j.col(i);
            dual.set_bracket(i, j, b);
        }
    }
    return dual;
}

Mat morphism_residual(const LieAlgebra& g, const Bivector& r, int i, int j) {
    LieAlgebra dual = koszul_dual(g, r);
    Mat sharp = r.sharp_matrix();
    Vec lhs = sharp * dual.bracket(dual.basis_vector(i), dual.basis_vector(j));
    Vec rhs = g.bracket(sharp.col(i), sharp.col(j));
    return Mat::col_vector(lhs - rhs);
}

Metric::Metric(Mat gram) : g_(std::move(gram)) {
    if (!g_.is_symmetric()) throw std::invalid_argument("metric: matrix not symmetric");
    if (!is_positive_definite(g_)) throw std::invalid_argument("metric: not positive definite");
    inv_ = inverse(g_);
}

Metric Metric::identity(int n) { return Metric(Mat::identity(n)); }

Scalar Metric::eval(const Vec& u, const Vec& v) const { return dot(u, g_ * v); }

Metric Metric::dual() const { return Metric(inv_); }

bool Metric::is_biinvariant(const LieAlgebra& g) const {
    int n = g.dim();
    for (int i = 0; i < n; ++i) {
        Mat adi = g.ad(g.basis_vector(i));
        if (!(adi.transpose() * g_ + g_ * adi).is_zero()) return false;
    }
    return true;
}

}  // namespace rplie
