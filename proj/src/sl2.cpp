#include "rplie/sl2.hpp"

#include <stdexcept>

namespace rplie {

namespace {

Vec to_coords(const Mat& m) {
    // (h, e, f) coordinates of a traceless 2x2 matrix.
    return Vec{m.at(0, 0), m.at(0, 1), m.at(1, 0)};
}

Vec bracket_coords(const Vec& a, const Vec& b) {
    // [h,e] = 2e, [h,f] = -2f, [e,f] = h in (h,e,f) coordinates.
    Scalar h = a[1] * b[2] - a[2] * b[1];
    Scalar e = (a[0] * b[1] - a[1] * b[0]) * 2;
    Scalar f = (a[2] * b[0] - a[0] * b[2]) * 2;
    return Vec{h, e, f};
}

}  // namespace

Sl2Subalgebra::Sl2Subalgebra(Mat gen1, Mat gen2) : g1_(std::move(gen1)), g2_(std::move(gen2)) {
    if (g1_.rows() != 2 || g1_.cols() != 2 || g2_.rows() != 2 || g2_.cols() != 2)
        throw std::invalid_argument("sl2: generators must be 2x2");
    if (!(g1_.at(0, 0) + g1_.at(1, 1)).is_zero() || !(g2_.at(0, 0) + g2_.at(1, 1)).is_zero())
        throw std::invalid_argument("sl2: generators must be traceless");
    Mat span = Mat::from_rows({to_coords(g1_), to_coords(g2_)}, 3);
    if (rank(span) != 2) throw std::invalid_argument("sl2: generators are dependent");
}

Vec Sl2Subalgebra::coords1() const { return to_coords(g1_); }
Vec Sl2Subalgebra::coords2() const { return to_coords(g2_); }

bool is_subalgebra(const Sl2Subalgebra& s) {
    Mat span = Mat::from_rows({s.coords1(), s.coords2()}, 3);
    Vec br = bracket_coords(s.coords1(), s.coords2());
    return in_span(row_space(span), br);
}

std::string Sl2Classification::name() const {
    switch (kind) {
        case Sl2Class::UpperTriangular: return "g1";
        case Sl2Class::LowerTriangular: return "g2";
        case Sl2Class::Family: return "g_x(x=" + x->str() + ")";
        case Sl2Class::NotSubalgebra: return "not a subalgebra";
    }
    return "?";
}

Sl2Classification classify(const Sl2Subalgebra& s) {
    Sl2Classification out;
    if (!is_subalgebra(s)) return out;
    // The span is the kernel of one functional (n_h, n_e, n_f); read the
    // class off the normal direction. The x-family has normal
    // (-2x, -x^2, 1), so x is recovered linearly from the normalized normal.
    Mat span = Mat::from_rows({s.coords1(), s.coords2()}, 3);
    Mat normal = kernel_basis(span);
    if (normal.rows() != 1) return out;
    Vec n = normal.row(0);
    bool nh = !n[0].is_zero(), ne = !n[1].is_zero(), nf = !n[2].is_zero();
    if (!nh && !ne && nf) {
        out.kind = Sl2Class::UpperTriangular;
        return out;
    }
    if (!nh && ne && !nf) {
        out.kind = Sl2Class::LowerTriangular;
        return out;
    }
    if (nf) {
        Scalar nh_s = n[0] / n[2], ne_s = n[1] / n[2];
        Scalar x = -nh_s / 2;
        if (!x.is_zero() && ne_s == -(x * x)) {
            out.kind = Sl2Class::Family;
            out.x = x;
            return out;
        }
    }
    return out;  // unreachable for genuine subalgebras
}

Sl2Subalgebra family_span(const Scalar& x) {
    if (x.is_zero()) throw std::invalid_argument("family_span: x must be nonzero");
    Scalar one = x.int_like(1);
    Mat a(2, 2), b(2, 2);
    a.at(0, 0) = one;
    a.at(0, 1) = -(one / x);
    a.at(1, 0) = x;
    a.at(1, 1) = -one;
    b.at(0, 1) = (one + one) / x;
    b.at(1, 0) = x * 2;
    return Sl2Subalgebra(a, b);
}

}  // namespace rplie
