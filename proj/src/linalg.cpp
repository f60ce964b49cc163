#include "rplie/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace rplie {

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Scalar s = a.empty() ? Scalar(0) : a[0].int_like(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= s;
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
    Mat m(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (int(rows[i].size()) != cols) throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j];
    }
    return m;
}

Mat Mat::col_vector(const Vec& v) {
    Mat m(int(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(int(i), 0) = v[i];
    return m;
}

Vec Mat::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Mat::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul: shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Vec Mat::operator*(const Vec& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("matvec: shape mismatch");
    Vec r(rows_, Scalar(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) -= o.at(i, j);
    return r;
}

Mat Mat::operator-() const { return scaled(Scalar(-1)); }

Mat Mat::scaled(const Scalar& s) const {
    Mat r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) *= s;
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != o.at(i, j)) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Mat rref(Mat m) {
    int lead = 0;
    for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
        int pr = -1;
        while (lead < m.cols()) {
            for (int i = r; i < m.rows(); ++i)
                if (!m.at(i, lead).is_zero()) {
                    pr = i;
                    break;
                }
            if (pr >= 0) break;
            ++lead;
        }
        if (lead == m.cols()) break;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Scalar inv = m.at(r, lead).int_like(1) / m.at(r, lead);
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, lead).is_zero()) continue;
            Scalar f = m.at(i, lead);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++lead;
    }
    return m;
}

int rank(const Mat& m) {
    Mat e = rref(m);
    int r = 0;
    for (int i = 0; i < e.rows(); ++i)
        if (!is_zero(e.row(i))) ++r;
    return r;
}

Scalar det(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    Mat a = m;
    int n = a.rows();
    Scalar d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!a.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return Scalar(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        Scalar inv = a.at(c, c).int_like(1) / a.at(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c) * inv;
            for (int j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return d;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    aug = rref(aug);
    for (int i = 0; i < n; ++i)
        if (aug.at(i, i) != Scalar(1)) throw std::domain_error("inverse: singular matrix");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (int(b.size()) != a.rows()) throw std::invalid_argument("solve: shape mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    aug = rref(aug);
    Vec x(a.cols(), Scalar(0));
    for (int i = 0; i < aug.rows(); ++i) {
        int lead = -1;
        for (int j = 0; j < a.cols(); ++j)
            if (!aug.at(i, j).is_zero()) {
                lead = j;
                break;
            }
        if (lead < 0) {
            if (!aug.at(i, a.cols()).is_zero()) return std::nullopt;
            continue;
        }
        x[lead] = aug.at(i, a.cols());
    }
    return x;
}

Mat kernel_basis(const Mat& m) {
    Mat e = rref(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(m.cols(), false);
    for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j)
            if (!e.at(i, j).is_zero()) {
                pivot_col.push_back(j);
                is_pivot[j] = true;
                break;
            }
    std::vector<Vec> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec v(m.cols(), Scalar(0));
        v[j] = Scalar(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -e.at(int(i), j);
        basis.push_back(v);
    }
    return row_space(Mat::from_rows(basis, m.cols()));
}

Mat row_space(const Mat& m) {
    Mat e = rref(m);
    std::vector<Vec> rows;
    for (int i = 0; i < e.rows(); ++i) {
        Vec r = e.row(i);
        if (!is_zero(r)) rows.push_back(r);
    }
    return Mat::from_rows(rows, m.cols());
}

bool in_span(const Mat& basis_rows, const Vec& v) {
    if (is_zero(v)) return true;
    if (basis_rows.rows() == 0) return false;
    return solve(basis_rows.transpose(), v).has_value();
}

bool same_span(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) return false;
    return row_space(a) == row_space(b);
}

bool is_positive_definite(const Mat& sym) {
    if (sym.rows() != sym.cols() || !sym.is_symmetric()) return false;
    int n = sym.rows();
    if (session_kind() == ScalarKind::Rational) {
        for (int k = 1; k <= n; ++k) {
            Mat minor(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) minor.at(i, j) = sym.at(i, j);
            if (!det(minor).is_positive()) return false;
        }
        return true;
    }
    // Float: symmetric elimination; every pivot must stay positive.
    Mat a = sym;
    for (int k = 0; k < n; ++k) {
        if (!a.at(k, k).is_positive()) return false;
        for (int i = k + 1; i < n; ++i) {
            Scalar f = a.at(i, k) / a.at(k, k);
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return true;
}

std::vector<Scalar> char_poly(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: not square");
    int n = m.rows();
    // Faddeev-LeVerrier: p(t) = t^n + c_{n-1} t^{n-1} + ... + c_0.
    std::vector<Scalar> c(n + 1, Scalar(0));
    c[n] = Scalar(1);
    Mat mk = Mat::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        Scalar tr(0);
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        Scalar ck = -tr / k;
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return c;
}

namespace {

// Divisors of |z| by trial division; false if the budget is exhausted.
bool divisors_of(mpz_class z, std::vector<mpz_class>& out) {
    z = abs(z);
    if (z == 0) return false;
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class p = 2;
    long steps = 0;
    while (z > 1) {
        if (++steps > 2000000) return false;
        if (p * p > z) {
            factors.push_back({z, 1});
            break;
        }
        if (z % p == 0) {
            int e = 0;
            while (z % p == 0) {
                z /= p;
                ++e;
            }
            factors.push_back({p, e});
        }
        p += (p == 2) ? 1 : 2;
    }
    out = {mpz_class(1)};
    for (auto& [q, e] : factors) {
        size_t base = out.size();
        mpz_class pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (size_t j = 0; j < base; ++j) {
                out.push_back(out[j] * pw);
                if (out.size() > 20000) return false;
            }
        }
    }
    return true;
}

Scalar eval_poly(const std::vector<Scalar>& poly, const Scalar& x) {
    Scalar v(0);
    for (size_t i = poly.size(); i-- > 0;) v = v * x + poly[i];
    return v;
}

}  // namespace

bool rational_roots(const std::vector<Scalar>& poly, std::vector<Scalar>& roots_out) {
    roots_out.clear();
    if (session_kind() != ScalarKind::Rational) return false;
    std::vector<Scalar> p = poly;
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    if (p.size() <= 1) return p.empty() ? false : true;

    while (p.size() > 1) {
        // Strip roots at zero.
        if (p[0].is_zero()) {
            roots_out.push_back(Scalar(0));
            p.erase(p.begin());
            continue;
        }
        // Primitive integer form.
        mpz_class denlcm = 1;
        for (auto& c : p) {
            mpz_class d = c.rat().get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), denlcm.get_mpz_t(), d.get_mpz_t());
            denlcm = denlcm / g * d;
        }
        std::vector<mpz_class> ic(p.size());
        for (size_t i = 0; i < p.size(); ++i)
            ic[i] = mpz_class(p[i].rat().get_num() * (denlcm / p[i].rat().get_den()));
        std::vector<mpz_class> dnum, dden;
        if (!divisors_of(ic.front(), dnum) || !divisors_of(ic.back(), dden)) return false;
        bool found = false;
        for (const auto& a : dnum) {
            for (const auto& b : dden) {
                for (int s = 0; s < 2 && !found; ++s) {
                    mpq_class cand(s ? -a : a, b);
                    cand.canonicalize();
                    Scalar x = Scalar::rational(cand);
                    if (eval_poly(p, x).is_zero()) {
                        roots_out.push_back(x);
                        // Synthetic division by (t - x).
                        std::vector<Scalar> q(p.size() - 1, Scalar(0));
                        Scalar carry = p.back();
                        for (size_t i = p.size() - 1; i-- > 0;) {
                            q[i] = carry;
                            carry = p[i] + carry * x;
                        }
                        p = q;
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return false;  // irrational or complex roots remain
    }
    return true;
}

}  // namespace rplie
