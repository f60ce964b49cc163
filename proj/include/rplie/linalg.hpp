#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "rplie/scalar.hpp"

namespace rplie {

using Vec = std::vector<Scalar>;

Scalar dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);

/// Dense row-major matrix over the session field.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows, int cols);
    static Mat col_vector(const Vec& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec col(int j) const;
    Mat transpose() const;

    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Scalar& s) const;

    bool operator==(const Mat& o) const;
    bool is_zero() const;
    bool is_antisymmetric() const;
    bool is_symmetric() const;

private:
    int rows_ = 0, cols_ = 0;
    Vec data_;
};

/// Reduced row echelon form; pivot search takes the first column with a
/// nonzero entry, scanning rows top-down. Deterministic over both fields.
Mat rref(Mat m);
int rank(const Mat& m);
Scalar det(const Mat& m);
Mat inverse(const Mat& m);  // throws std::domain_error if singular

/// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);
/// Echelonized basis of the null space (rows of the returned matrix).
Mat kernel_basis(const Mat& m);
/// Echelonized basis of the span of the given rows (zero rows dropped).
Mat row_space(const Mat& m);

bool in_span(const Mat& basis_rows, const Vec& v);
bool same_span(const Mat& a, const Mat& b);

/// Leading principal minors test (exact) in rational mode; in float mode an
/// LDL-style elimination with positive pivots.
bool is_positive_definite(const Mat& sym);

/// Characteristic polynomial det(tI - M), ascending coefficients, exact
/// (Faddeev-LeVerrier).
std::vector<Scalar> char_poly(const Mat& m);

/// All rational roots of the polynomial, with multiplicity, found by the
/// rational root theorem on the primitive integer form. Returns false when
/// the divisor enumeration exceeds its budget (rational mode only; float mode
/// is not supported here).
bool rational_roots(const std::vector<Scalar>& poly, std::vector<Scalar>& roots_out);

}  // namespace rplie
