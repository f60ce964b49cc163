#include <doctest.h>

#include "rplie/linalg.hpp"

using namespace rplie;

namespace {
struct RationalSession {
    RationalSession() { set_session(ScalarKind::Rational); }
};
}  // namespace

TEST_CASE("scalar parsing and printing") {
    RationalSession s;
    CHECK(Scalar::parse("3/4").str() == "3/4");
    CHECK(Scalar::parse("-7").str() == "-7");
    CHECK(Scalar::parse("0.25") == Scalar::ratio(1, 4));
    CHECK(Scalar::parse("-1.5") == Scalar::ratio(-3, 2));
    CHECK(Scalar::parse("2/4").str() == "1/2");
    CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Scalar::ratio(1, 3) / Scalar(0), std::domain_error);
}

TEST_CASE("scalar arithmetic stays exact") {
    RationalSession s;
    Scalar a = Scalar::ratio(1, 3), b = Scalar::ratio(2, 5);
    CHECK((a + b).str() == "11/15");
    CHECK((a * b).str() == "2/15");
    CHECK((a - b).is_negative());
    CHECK((a / b).str() == "5/6");
    Scalar tiny = Scalar::ratio(1, 1000000000L);
    CHECK(!tiny.is_zero());  // no tolerance in the rational field
}

TEST_CASE("float mode compares against the session tolerance") {
    set_session(ScalarKind::Float, 1e-9);
    Scalar a = Scalar::floating(1.0), b = Scalar::floating(1.0 + 1e-12);
    CHECK(a == b);
    CHECK(Scalar::floating(1e-10).is_zero());
    CHECK(!Scalar::floating(1e-6).is_zero());
    CHECK(Scalar::parse("0.5").str() == "0.5");
    set_session(ScalarKind::Rational);
}

TEST_CASE("mixing fields in one computation throws") {
    set_session(ScalarKind::Rational);
    Scalar a(1);
    set_session(ScalarKind::Float);
    Scalar b(1);
    CHECK_THROWS_AS(a + b, std::logic_error);
    set_session(ScalarKind::Rational);
}

TEST_CASE("exact square roots") {
    RationalSession s;
    Scalar out(0);
    CHECK(exact_sqrt(Scalar::ratio(9, 16), out));
    CHECK(out == Scalar::ratio(3, 4));
    CHECK(!exact_sqrt(Scalar(2), out));
    CHECK(!exact_sqrt(Scalar(-1), out));
}

TEST_CASE("rref, rank, kernel, inverse") {
    RationalSession s;
    Mat m(3, 3);
    long vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Scalar(vals[i][j]);
    CHECK(rank(m) == 2);
    Mat k = kernel_basis(m);
    REQUIRE(k.rows() == 1);
    CHECK(is_zero(m * k.row(0)));

    Mat inv_in(2, 2);
    inv_in.at(0, 0) = Scalar(1);
    inv_in.at(0, 1) = Scalar::ratio(1, 2);
    inv_in.at(1, 0) = Scalar::ratio(1, 2);
    inv_in.at(1, 1) = Scalar(1);
    Mat inv = inverse(inv_in);
    CHECK(inv * inv_in == Mat::identity(2));
    CHECK(inv.at(0, 0) == Scalar::ratio(4, 3));
    CHECK(inv.at(0, 1) == Scalar::ratio(-2, 3));

    CHECK_THROWS_AS(inverse(m), std::domain_error);
}

TEST_CASE("solve reports inconsistency") {
    RationalSession s;
    Mat a(2, 2);
    a.at(0, 0) = Scalar(1);
    a.at(0, 1) = Scalar(1);
    a.at(1, 0) = Scalar(2);
    a.at(1, 1) = Scalar(2);
    CHECK(!solve(a, Vec{Scalar(1), Scalar(3)}).has_value());
    auto x = solve(a, Vec{Scalar(1), Scalar(2)});
    REQUIRE(x.has_value());
    CHECK((a * *x)[0] == Scalar(1));
}

TEST_CASE("positive definiteness by leading minors") {
    RationalSession s;
    Mat good(2, 2);
    good.at(0, 0) = Scalar(2);
    good.at(0, 1) = Scalar(1);
    good.at(1, 0) = Scalar(1);
    good.at(1, 1) = Scalar(2);
    CHECK(is_positive_definite(good));
    Mat bad = good;
    bad.at(0, 1) = Scalar(3);
    bad.at(1, 0) = Scalar(3);
    CHECK(!is_positive_definite(bad));
}

TEST_CASE("characteristic polynomial and rational roots") {
    RationalSession s;
    Mat d(3, 3);
    d.at(0, 0) = Scalar::ratio(1, 2);
    d.at(1, 1) = Scalar(-3);
    d.at(2, 2) = Scalar(2);
    std::vector<Scalar> cp = char_poly(d);
    // (t - 1/2)(t + 3)(t - 2) = t^3 + 1/2 t^2 - 13/2 t + 3
    CHECK(cp[3] == Scalar(1));
    CHECK(cp[2] == Scalar::ratio(1, 2));
    CHECK(cp[1] == Scalar::ratio(-13, 2));
    CHECK(cp[0] == Scalar(3));
    std::vector<Scalar> roots;
    REQUIRE(rational_roots(cp, roots));
    REQUIRE(roots.size() == 3);
    Scalar prod = roots[0] * roots[1] * roots[2];
    CHECK(prod == Scalar(-3));
}

TEST_CASE("rref is deterministic and idempotent") {
    RationalSession s;
    Mat m(2, 3);
    m.at(0, 1) = Scalar(2);
    m.at(0, 2) = Scalar(4);
    m.at(1, 1) = Scalar(1);
    m.at(1, 2) = Scalar(3);
    Mat e = rref(m);
    CHECK(e == rref(e));
    CHECK(e.at(0, 1) == Scalar(1));  // pivot at the first nonzero column
}
