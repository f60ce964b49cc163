#pragma once

#include <optional>
#include <string>

#include "rplie/linalg.hpp"

namespace rplie {

/// A 2-dimensional subspace of the traceless 2x2 matrices, given by two
/// independent generators.
class Sl2Subalgebra {
public:
    /// Generators as 2x2 matrices; both must be traceless and independent.
    Sl2Subalgebra(Mat gen1, Mat gen2);

    const Mat& gen1() const { return g1_; }
    const Mat& gen2() const { return g2_; }
    /// Coordinates (h, e, f) of a generator in the standard basis
    /// h = diag(1,-1), e = upper shift, f = lower shift.
    Vec coords1() const;
    Vec coords2() const;

private:
    Mat g1_, g2_;
};

bool is_subalgebra(const Sl2Subalgebra& s);

enum class Sl2Class { UpperTriangular, LowerTriangular, Family, NotSubalgebra };

struct Sl2Classification {
    Sl2Class kind = Sl2Class::NotSubalgebra;
    std::optional<Scalar> x;  // the family parameter, when kind == Family
    std::string name() const;
};

/// Exact span-invariant classification of 2-dimensional subalgebras: the
/// upper-triangular algebra, the lower-triangular algebra, or the x-family
/// spanned by [[1,-1/x],[x,-1]] and [[0,2/x],[2x,0]] with x != 0.
Sl2Classification classify(const Sl2Subalgebra& s);

/// Generators of the x-family span, for tests and sampling.
Sl2Subalgebra family_span(const Scalar& x);

}  // namespace rplie
