#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rplie/connection.hpp"

using namespace rplie;
using fixtures::RationalSession;

namespace {

// (a, b, e, f) with [a,e] = f, [a,f] = -e and b central; flat for the
// identity metric.
LieAlgebra rotation4() {
    LieAlgebra g(4);
    g.set_bracket(0, 2, Vec{Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
    g.set_bracket(0, 3, Vec{Scalar(0), Scalar(0), Scalar(-1), Scalar(0)});
    return g;
}

// Two rotation planes with distinct weights plus a 2-dimensional complement.
LieAlgebra rotation6(const Scalar& l1, const Scalar& l2) {
    LieAlgebra g(6);
    Vec v(6, Scalar(0));
    v[3] = l1;
    g.set_bracket(0, 2, v);  // [a, e1] = l1 f1
    v = Vec(6, Scalar(0));
    v[2] = -l1;
    g.set_bracket(0, 3, v);
    v = Vec(6, Scalar(0));
    v[5] = l2;
    g.set_bracket(0, 4, v);  // [a, e2] = l2 f2
    v = Vec(6, Scalar(0));
    v[4] = -l2;
    g.set_bracket(0, 5, v);
    return g;
}

}  // namespace

TEST_CASE("levi-civita product on the pinned examples") {
    RationalSession s;
    LieAlgebra ab(3);
    LeviCivitaProduct a0 = levi_civita(ab, Metric::identity(3));
    for (int i = 0; i < 3; ++i) CHECK(a0.operator_of(ab.basis_vector(i)).is_zero());

    LieAlgebra g = fixtures::solvable2();
    LeviCivitaProduct a = levi_civita(g, Metric::identity(2));
    CHECK(a.apply(g.basis_vector(0), g.basis_vector(0)) == Vec{Scalar(0), Scalar(-1)});
    CHECK(a.apply(g.basis_vector(0), g.basis_vector(1)) == Vec{Scalar(1), Scalar(0)});
    CHECK(a.operator_of(g.basis_vector(1)).is_zero());

    // bi-invariant metric forces the half-bracket on so(3)
    LieAlgebra so3 = fixtures::so3();
    LeviCivitaProduct ac = levi_civita(so3, Metric::identity(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Vec expect = Scalar::ratio(1, 2) *
                         so3.bracket(so3.basis_vector(i), so3.basis_vector(j));
            CHECK(ac.apply(so3.basis_vector(i), so3.basis_vector(j)) == expect);
        }
}

TEST_CASE("levi-civita matches the independent Koszul solve") {
    RationalSession s;
    fixtures::Rng rng(5);
    for (int t = 0; t < 15; ++t) {
        int dim = int(rng.range(2, 5));
        LieAlgebra g = fixtures::random_algebra(rng, dim);
        Metric rho = fixtures::random_metric(rng, dim);
        LeviCivitaProduct a = levi_civita(g, rho);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Vec expect = oracles::levi_civita_of(g, rho, i, j);
                for (int k = 0; k < dim; ++k) CHECK(a.coef(i, j, k) == expect[k]);
            }
        CHECK(has_torsion_identity(g, a));
        CHECK(has_metric_identity(rho, a));
    }
}

TEST_CASE("uniqueness: no nonzero torsionless metric-compatible correction") {
    RationalSession s;
    fixtures::Rng rng(13);
    for (int t = 0; t < 10; ++t) {
        int n = int(rng.range(2, 4));
        LieAlgebra g = fixtures::random_algebra(rng, n);
        Metric rho = fixtures::random_metric(rng, n);
        // unknowns d_{ijk}; torsionless corrections are symmetric in (i,j),
        // metric compatibility is skewness of each d_i block.
        std::vector<Vec> rows;
        auto idx = [n](int i, int j, int k) { return (i * n + j) * n + k; };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Vec row(n * n * n, Scalar(0));
                    row[idx(i, j, k)] += Scalar(1);
                    row[idx(j, i, k)] -= Scalar(1);
                    rows.push_back(row);
                }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Vec row(n * n * n, Scalar(0));
                    for (int m = 0; m < n; ++m) {
                        row[idx(i, j, m)] += rho.matrix().at(m, k);
                        row[idx(i, k, m)] += rho.matrix().at(j, m);
                    }
                    rows.push_back(row);
                }
        CHECK(kernel_basis(Mat::from_rows(rows, n * n * n)).rows() == 0);
    }
}

TEST_CASE("curvature and flatness") {
    RationalSession s;
    LieAlgebra ab(3);
    CHECK(is_flat(ab, levi_civita(ab, Metric::identity(3))));

    LieAlgebra so3 = fixtures::so3();
    CHECK(!is_flat(so3, levi_civita(so3, Metric::identity(3))));
    CHECK(!oracles::flat_by_curvature(so3, Metric::identity(3)));

    LieAlgebra rot = rotation4();
    CHECK(is_flat(rot, levi_civita(rot, Metric::identity(4))));
    CHECK(oracles::flat_by_curvature(rot, Metric::identity(4)));
}

TEST_CASE("structural flatness split agrees with curvature") {
    RationalSession s;
    LieAlgebra rot = rotation4();
    FlatSplitReport rep = milnor_flat_check(rot, Metric::identity(4));
    CHECK(rep.flat);
    REQUIRE(rep.derived_basis.rows() == 2);
    // derived ideal is span{e3, e4}
    CHECK(rep.derived_basis.at(0, 2) == Scalar(1));
    CHECK(rep.derived_basis.at(1, 3) == Scalar(1));

    LieAlgebra sol = fixtures::solvable2();
    FlatSplitReport rep2 = milnor_flat_check(sol, Metric::identity(2));
    CHECK(!rep2.flat);  // odd-dimensional derived ideal
    CHECK(!rep2.derived_even);
    CHECK(!oracles::flat_by_curvature(sol, Metric::identity(2)));

    fixtures::Rng rng(19);
    for (int t = 0; t < 15; ++t) {
        int dim = int(rng.range(2, 5));
        LieAlgebra g = fixtures::random_algebra(rng, dim);
        Metric rho = fixtures::random_metric(rng, dim);
        CHECK(milnor_flat_check(g, rho).flat == is_flat(g, levi_civita(g, rho)));
    }
}

TEST_CASE("kahler check") {
    RationalSession s;
    // abelian: any nondegenerate form is parallel
    LieAlgebra ab(4);
    Bivector w(4);
    w.set(0, 1, Scalar(1));
    w.set(2, 3, Scalar::ratio(-2, 3));
    CHECK(kahler_check(ab, Metric::identity(4), w));

    // classification-table block: [e1,e2] = e2, diagonal metric, paired form
    LieAlgebra g(4);
    g.set_bracket(0, 1, Vec{Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
    Mat diag(4, 4);
    diag.at(0, 0) = Scalar(2);
    diag.at(1, 1) = Scalar(3);
    diag.at(2, 2) = Scalar::ratio(1, 2);
    diag.at(3, 3) = Scalar(5);
    Bivector r(4);
    r.set(0, 1, Scalar(2));
    r.set(2, 3, Scalar(-3));
    Bivector omega(-inverse(r.matrix()));
    CHECK(kahler_check(g, Metric(diag), omega));
    CHECK(oracles::kahler_holds(g, Metric(diag), omega.matrix()));

    // mismatched pairing fails; oracle confirms the verdict
    Bivector cross(4);
    cross.set(0, 2, Scalar(1));
    cross.set(1, 3, Scalar(1));
    CHECK(!kahler_check(g, Metric::identity(4), cross));
    CHECK(!oracles::kahler_holds(g, Metric::identity(4), cross.matrix()));

    Bivector degenerate(4);
    degenerate.set(0, 1, Scalar(1));
    CHECK_THROWS_AS(kahler_check(g, Metric::identity(4), degenerate), std::invalid_argument);
}

TEST_CASE("flat algebras carry a parallel symplectic form") {
    RationalSession s;
    // abelian dimension 4
    LieAlgebra ab(4);
    Bivector w0 = flat_kahler_form(ab, Metric::identity(4));
    CHECK(kahler_check(ab, Metric::identity(4), w0));
    CHECK(!det(w0.matrix()).is_zero());

    // rotation example: the constructed form is exactly a^ b^ + e^ f^
    LieAlgebra rot = rotation4();
    Bivector w = flat_kahler_form(rot, Metric::identity(4));
    Mat expect(4, 4);
    expect.at(0, 1) = Scalar(1);
    expect.at(1, 0) = Scalar(-1);
    expect.at(2, 3) = Scalar(1);
    expect.at(3, 2) = Scalar(-1);
    CHECK(w.matrix() == expect);
    CHECK(kahler_check(rot, Metric::identity(4), w));

    // two distinct rotation weights
    LieAlgebra rot6 = rotation6(Scalar::ratio(1, 2), Scalar(3));
    REQUIRE(jacobi(rot6).holds);
    Bivector w6 = flat_kahler_form(rot6, Metric::identity(6));
    CHECK(kahler_check(rot6, Metric::identity(6), w6));
    CHECK(!det(w6.matrix()).is_zero());

    // non-flat input is rejected
    CHECK_THROWS_AS(flat_kahler_form(fixtures::so3(), Metric::identity(3)),
                    std::invalid_argument);
    LieAlgebra pad4 = fixtures::heisenberg(4);
    CHECK_THROWS_AS(flat_kahler_form(pad4, Metric::identity(4)), std::invalid_argument);
}

TEST_CASE("flat form construction in float mode") {
    set_session(ScalarKind::Float, 1e-9);
    LieAlgebra rot(4);
    rot.set_bracket(0, 2, Vec{Scalar(0), Scalar(0), Scalar(0), Scalar::floating(0.5)});
    rot.set_bracket(0, 3, Vec{Scalar(0), Scalar(0), Scalar::floating(-0.5), Scalar(0)});
    Bivector w = flat_kahler_form(rot, Metric::identity(4));
    CHECK(kahler_check(rot, Metric::identity(4), w));
    set_session(ScalarKind::Rational);
}
