#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace rplie;
using fixtures::RationalSession;

TEST_CASE("jacobi on the basic examples") {
    RationalSession s;
    CHECK(jacobi(LieAlgebra(3)).holds);  // abelian
    CHECK(jacobi(fixtures::so3()).holds);
    // oracle agreement on so(3)
    CHECK(oracles::jacobi_holds(fixtures::so3()));

    // a genuinely failing bracket, expected value from the oracle loop:
    // [e1,e2] = e1, [e1,e3] = e3 has residual e3 on the triple (1,2,3)
    LieAlgebra bad(3);
    bad.set_bracket(0, 1, Vec{Scalar(1), Scalar(0), Scalar(0)});
    bad.set_bracket(0, 2, Vec{Scalar(0), Scalar(0), Scalar(1)});
    CHECK(oracles::jacobi_residual(bad, 0, 1, 2, 2) == Scalar(1));
    JacobiReport rep = jacobi(bad);
    CHECK(!rep.holds);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations[0].i == 0);
    CHECK(rep.violations[0].j == 1);
    CHECK(rep.violations[0].k == 2);
    CHECK(rep.violations[0].l == 2);
    CHECK(rep.violations[0].residual == Scalar(1));
}

TEST_CASE("jacobi residuals match the oracle on random algebras") {
    RationalSession s;
    fixtures::Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        int dim = int(rng.range(2, 5));
        LieAlgebra g = fixtures::random_algebra(rng, dim);
        CHECK(jacobi(g).holds == oracles::jacobi_holds(g));
    }
}

TEST_CASE("adjoint and coadjoint operators") {
    RationalSession s;
    LieAlgebra ab(3);
    CHECK(ab.ad(Vec{Scalar(1), Scalar(2), Scalar(3)}).is_zero());

    LieAlgebra g = fixtures::so3();
    Mat ad3 = g.ad(g.basis_vector(2));
    // ad(e3) e1 = [e3, e1] = e2, ad(e3) e2 = -e1, ad(e3) e3 = 0
    CHECK(ad3.col(0) == Vec{Scalar(0), Scalar(1), Scalar(0)});
    CHECK(ad3.col(1) == Vec{Scalar(-1), Scalar(0), Scalar(0)});
    CHECK(is_zero(ad3.col(2)));
    CHECK(g.coad(g.basis_vector(2)) == -ad3.transpose());
}

TEST_CASE("contraction map pinned by its defining identity") {
    RationalSession s;
    Scalar alpha(2);
    Bivector r(3);
    r.set(0, 1, alpha);
    Mat sharp = r.sharp_matrix();
    CHECK(sharp.col(0) == Vec{Scalar(0), alpha, Scalar(0)});     // r_#(e1*) = alpha e2
    CHECK(sharp.col(1) == Vec{-alpha, Scalar(0), Scalar(0)});    // r_#(e2*) = -alpha e1
    CHECK(is_zero(sharp.col(2)));
    // <beta, r_#(alpha)> = r(alpha, beta) on all dual basis pairs
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(sharp.col(i)[j] == r.at(i, j));

    Bivector zero(4);
    CHECK(zero.sharp_matrix().is_zero());
}

TEST_CASE("antisymmetric matrices have even rank") {
    RationalSession s;
    fixtures::Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        int dim = int(rng.range(2, 6));
        Bivector r = fixtures::random_bivector(rng, dim);
        CHECK(rank(r.sharp_matrix()) % 2 == 0);
    }
}

TEST_CASE("yang-baxter bracket on the pinned examples") {
    RationalSession s;
    fixtures::Rng rng(3);
    // any r on an abelian algebra
    LieAlgebra ab(4);
    CHECK(yang_baxter_bracket(ab, fixtures::random_bivector(rng, 4)).is_zero());

    // so(3) with r = e1 ^ e2: the image misses e3 = [e1, e2]
    LieAlgebra g = fixtures::so3();
    Bivector r(3);
    r.set(0, 1, Scalar(1));
    Trivector t = yang_baxter_bracket(g, r);
    CHECK(!t.is_zero());
    CHECK(t.at(2, 0, 1) == oracles::yang_baxter_entry(g, r, 2, 0, 1));
    CHECK(t.at(2, 0, 1) == Scalar(1));

    // first classification row: [e1,e2] = a e1, [e3,e2] = b e1, r = alpha e12
    LieAlgebra row(3);
    row.set_bracket(0, 1, Vec{Scalar(2), Scalar(0), Scalar(0)});
    row.set_bracket(2, 1, Vec{Scalar(3), Scalar(0), Scalar(0)});
    Bivector ra(3);
    ra.set(0, 1, Scalar(5));
    CHECK(yang_baxter_bracket(row, ra).is_zero());
}

TEST_CASE("trivector output is antisymmetric under all permutations") {
    RationalSession s;
    fixtures::Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        int dim = int(rng.range(3, 5));
        LieAlgebra g = fixtures::random_algebra(rng, dim);
        Trivector tv = yang_baxter_bracket(g, fixtures::random_bivector(rng, dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k) {
                    CHECK(tv.at(i, j, k) == -tv.at(j, i, k));
                    CHECK(tv.at(i, j, k) == -tv.at(i, k, j));
                    CHECK(tv.at(i, j, k) == tv.at(j, k, i));
                    if (i == j || j == k || i == k) CHECK(tv.at(i, j, k).is_zero());
                }
    }
}

TEST_CASE("koszul dual bracket") {
    RationalSession s;
    // r = 0 gives the abelian dual for every algebra
    fixtures::Rng rng(23);
    for (int t = 0; t < 10; ++t) {
        int dim = int(rng.range(2, 5));
        LieAlgebra g = fixtures::random_algebra(rng, dim);
        CHECK(koszul_dual(g, Bivector(dim)).is_abelian());
    }

    // first classification row with a = b = alpha = 1: dual passes jacobi
    LieAlgebra row(3);
    row.set_bracket(0, 1, Vec{Scalar(1), Scalar(0), Scalar(0)});
    row.set_bracket(2, 1, Vec{Scalar(1), Scalar(0), Scalar(0)});
    Bivector r(3);
    r.set(0, 1, Scalar(1));
    REQUIRE(yang_baxter_bracket(row, r).is_zero());
    LieAlgebra dual = koszul_dual(row, r);
    CHECK(jacobi(dual).holds);
    // morphism property holds on all basis pairs
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(morphism_residual(row, r, i, j).is_zero());
}

TEST_CASE("dual metric and index raising") {
    RationalSession s;
    Metric id = Metric::identity(3);
    CHECK(id.dual().matrix() == Mat::identity(3));
    CHECK(id.sharp_matrix() == Mat::identity(3));

    // block-diagonal table metric inverts entry by entry
    Mat diag(5, 5);
    Scalar rho2 = Scalar::ratio(3, 2), mu = Scalar::ratio(5, 3);
    diag.at(0, 0) = Scalar(1);
    diag.at(1, 1) = rho2;
    diag.at(2, 2) = mu;
    diag.at(3, 3) = mu;
    diag.at(4, 4) = Scalar(1);
    Metric m(diag);
    CHECK(m.dual().matrix().at(1, 1) == Scalar(1) / rho2);
    CHECK(m.dual().matrix().at(2, 2) == Scalar(1) / mu);

    // 2x2 with off-diagonal tau
    Scalar tau = Scalar::ratio(1, 2);
    Mat two(2, 2);
    two.at(0, 0) = Scalar(1);
    two.at(0, 1) = tau;
    two.at(1, 0) = tau;
    two.at(1, 1) = Scalar(1);
    Metric m2(two);
    Scalar f = Scalar(1) / (Scalar(1) - tau * tau);
    CHECK(m2.dual().matrix().at(0, 0) == f);
    CHECK(m2.dual().matrix().at(0, 1) == -(f * tau));

    // identities: sharp inverts, dual pairing matches raised vectors
    fixtures::Rng rng(31);
    for (int t = 0; t < 10; ++t) {
        int dim = int(rng.range(2, 5));
        Metric rho = fixtures::random_metric(rng, dim);
        CHECK(rho.sharp_matrix() * rho.matrix() == Mat::identity(dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Vec a(dim, Scalar(0)), b(dim, Scalar(0));
                a[i] = Scalar(1);
                b[j] = Scalar(1);
                Scalar lhs = dot(a, rho.dual().matrix() * b);
                Scalar rhs = rho.eval(rho.sharp_matrix() * a, rho.sharp_matrix() * b);
                CHECK(lhs == rhs);
            }
    }

    Mat bad(2, 2);
    bad.at(0, 1) = Scalar(1);
    bad.at(1, 0) = Scalar(1);
    CHECK_THROWS_AS(Metric{bad}, std::invalid_argument);
}

TEST_CASE("morphism property across catalog-style flat inputs") {
    RationalSession s;
    // Heisenberg-like second row: [e3,e1] = -b e1 + c e2, [e3,e2] = d e1 + b e2
    fixtures::Rng rng(41);
    for (int t = 0; t < 20; ++t) {
        LieAlgebra g(3);
        Scalar b = rng.small(), c = rng.small(), d = rng.small();
        g.set_bracket(2, 0, Vec{-b, c, Scalar(0)});
        g.set_bracket(2, 1, Vec{d, b, Scalar(0)});
        Bivector r(3);
        r.set(0, 1, rng.nonzero());
        REQUIRE(yang_baxter_bracket(g, r).is_zero());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(morphism_residual(g, r, i, j).is_zero());
    }
}
