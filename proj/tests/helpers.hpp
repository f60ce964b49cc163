#pragma once

// Shared fixture algebras and generators for the test suites.

#include <random>

#include "rplie/lie.hpp"

namespace fixtures {

using namespace rplie;

struct RationalSession {
    RationalSession() { set_session(ScalarKind::Rational); }
};

inline LieAlgebra so3() {
    LieAlgebra g(3);
    g.set_bracket(0, 1, Vec{Scalar(0), Scalar(0), Scalar(1)});
    g.set_bracket(1, 2, Vec{Scalar(1), Scalar(0), Scalar(0)});
    g.set_bracket(2, 0, Vec{Scalar(0), Scalar(1), Scalar(0)});
    return g;
}

// [e1,e2] = e1, abelian padding up to dim n.
inline LieAlgebra solvable2(int n = 2) {
    LieAlgebra g(n);
    Vec v(n, Scalar(0));
    v[0] = Scalar(1);
    g.set_bracket(0, 1, v);
    return g;
}

// Heisenberg [e1,e2] = e3, padded to dim n >= 3.
inline LieAlgebra heisenberg(int n = 3) {
    LieAlgebra g(n);
    Vec v(n, Scalar(0));
    v[2] = Scalar(1);
    g.set_bracket(0, 1, v);
    return g;
}

// so(n) in the basis L_{ij} = E_{ij} - E_{ji}, pairs ordered so the first two
// span a maximal torus for n = 4: (1,2), (3,4), then the rest.
inline LieAlgebra so_n(int n, std::vector<std::pair<int, int>>* pairs_out = nullptr) {
    std::vector<std::pair<int, int>> pairs;
    if (n == 4) {
        pairs = {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    }
    int dim = int(pairs.size());
    auto as_matrix = [&](int a) {
        Mat m(n, n);
        m.at(pairs[a].first, pairs[a].second) = Scalar(1);
        m.at(pairs[a].second, pairs[a].first) = Scalar(-1);
        return m;
    };
    LieAlgebra g(dim);
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) {
            Mat c = as_matrix(a) * as_matrix(b) - as_matrix(b) * as_matrix(a);
            Vec coords(dim, Scalar(0));
            for (int k = 0; k < dim; ++k) coords[k] = c.at(pairs[k].first, pairs[k].second);
            g.set_bracket(a, b, coords);
        }
    if (pairs_out) *pairs_out = pairs;
    return g;
}

class Rng {
public:
    explicit Rng(uint64_t seed) : rng_(seed) {}
    long range(long lo, long hi) { return lo + long(rng_() % uint64_t(hi - lo + 1)); }
    Scalar small() { return Scalar::ratio(range(-4, 4), range(1, 3)); }
    Scalar nonzero() {
        long n = 0;
        while (n == 0) n = range(-4, 4);
        return Scalar::ratio(n, range(1, 3));
    }
    Scalar positive() { return Scalar::ratio(range(1, 5), range(1, 2)); }

private:
    std::mt19937_64 rng_;
};

// A Lie algebra from a small pool, all Jacobi-checked by construction:
// abelian, solvable/heisenberg/so(3) with abelian padding, or an
// almost-abelian extension by one generator acting arbitrarily.
inline LieAlgebra random_algebra(Rng& rng, int dim) {
    int kind = int(rng.range(0, 3));
    if (kind == 0) return LieAlgebra(dim);
    if (kind == 1 && dim >= 2) return solvable2(dim);
    if (kind == 2 && dim >= 3) return heisenberg(dim);
    // one generator acting on an abelian ideal spanned by e1..e_{n-1}
    LieAlgebra g(dim);
    for (int i = 0; i + 1 < dim; ++i) {
        Vec v(dim, Scalar(0));
        for (int k = 0; k + 1 < dim; ++k) v[k] = rng.small();
        g.set_bracket(dim - 1, i, v);
    }
    return g;
}

inline Bivector random_bivector(Rng& rng, int dim) {
    Bivector r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (rng.range(0, 2) == 0) r.set(i, j, rng.small());
    return r;
}

// Exact positive definite matrix U^T D U with positive diagonal D and a
// unipotent integer U.
inline Metric random_metric(Rng& rng, int dim) {
    Mat u = Mat::identity(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (rng.range(0, 2) == 0) u.at(i, j) = Scalar(rng.range(-1, 1));
    Mat d(dim, dim);
    for (int i = 0; i < dim; ++i) d.at(i, i) = rng.positive();
    return Metric(u.transpose() * d * u);
}

}  // namespace fixtures
