#include "rplie/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace rplie {

namespace {
ScalarKind g_kind = ScalarKind::Rational;
double g_epsilon = 1e-9;
}  // namespace

ScalarKind session_kind() { return g_kind; }
double session_epsilon() { return g_epsilon; }

void set_session(ScalarKind kind, double epsilon) {
    g_kind = kind;
    g_epsilon = epsilon;
}

Scalar::Scalar(long v) : kind_(g_kind) {
    if (kind_ == ScalarKind::Rational)
        q_ = v;
    else
        d_ = static_cast<double>(v);
}

Scalar Scalar::ratio(long num, long den) {
    if (den == 0) throw std::domain_error("scalar: zero denominator");
    Scalar s(0);
    if (s.kind_ == ScalarKind::Rational) {
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
    } else {
        s.d_ = static_cast<double>(num) / static_cast<double>(den);
    }
    return s;
}

Scalar Scalar::rational(mpq_class q) {
    Scalar s(0);
    s.kind_ = ScalarKind::Rational;
    q.canonicalize();
    s.q_ = std::move(q);
    s.d_ = 0.0;
    return s;
}

Scalar Scalar::floating(double d) {
    Scalar s(0);
    s.kind_ = ScalarKind::Float;
    s.q_ = 0;
    s.d_ = d;
    return s;
}

Scalar Scalar::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("scalar: empty literal");
    if (g_kind == ScalarKind::Float) {
        size_t pos = 0;
        double v = 0;
        auto slash = text.find('/');
        try {
            if (slash != std::string::npos) {
                size_t p2 = 0;
                double num = std::stod(text.substr(0, slash), &pos);
                double den = std::stod(text.substr(slash + 1), &p2);
                if (pos != slash || p2 != text.size() - slash - 1 || den == 0)
                    throw std::invalid_argument("bad");
                return floating(num / den);
            }
            v = std::stod(text, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("scalar: bad literal '" + text + "'");
        }
        if (pos != text.size())
            throw std::invalid_argument("scalar: bad literal '" + text + "'");
        return floating(v);
    }
    // Rational mode: integers, p/q, or decimals (decimals are exact).
    std::string t = text;
    auto bad = [&]() { throw std::invalid_argument("scalar: bad literal '" + text + "'"); };
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) bad();
        mpq_class q{mpz_class(num), mpz_class(den)};
        if (q.get_den() == 0) throw std::domain_error("scalar: zero denominator");
        return rational(q);
    }
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        if (!is_int(ip) || (!fp.empty() && !is_int(fp))) bad();
        mpz_class scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        mpz_class whole(ip), frac(fp.empty() ? "0" : fp);
        mpq_class q(whole * scale + frac, scale);
        if (neg) q = -q;
        return rational(q);
    }
    if (!is_int(t)) bad();
    return rational(mpq_class(mpz_class(t)));
}

void Scalar::check_same_kind(const Scalar& o) const {
    if (kind_ != o.kind_)
        throw std::logic_error("scalar: mixed rational/float arithmetic in one computation");
}

bool Scalar::is_zero() const {
    if (kind_ == ScalarKind::Rational) return sgn(q_) == 0;
    return std::fabs(d_) <= g_epsilon;
}

bool Scalar::is_negative() const {
    if (kind_ == ScalarKind::Rational) return sgn(q_) < 0;
    return d_ < -g_epsilon;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (kind_ == ScalarKind::Rational)
        s.q_ = -s.q_;
    else
        s.d_ = -s.d_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_kind(o);
    if (kind_ == ScalarKind::Rational)
        q_ += o.q_;
    else
        d_ += o.d_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_kind(o);
    if (kind_ == ScalarKind::Rational)
        q_ -= o.q_;
    else
        d_ -= o.d_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_kind(o);
    if (kind_ == ScalarKind::Rational)
        q_ *= o.q_;
    else
        d_ *= o.d_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_kind(o);
    if (kind_ == ScalarKind::Rational) {
        if (sgn(o.q_) == 0) throw std::domain_error("scalar: division by zero");
        q_ /= o.q_;
    } else {
        if (o.d_ == 0.0) throw std::domain_error("scalar: division by zero");
        d_ /= o.d_;
    }
    return *this;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_kind(o);
    if (kind_ == ScalarKind::Rational) return q_ == o.q_;
    return std::fabs(d_ - o.d_) <= g_epsilon;
}

bool Scalar::less_than(const Scalar& o) const {
    check_same_kind(o);
    if (kind_ == ScalarKind::Rational) return q_ < o.q_;
    return d_ < o.d_;
}

Scalar Scalar::abs() const {
    Scalar s = *this;
    if (kind_ == ScalarKind::Rational)
        s.q_ = ::abs(s.q_);
    else
        s.d_ = std::fabs(s.d_);
    return s;
}

Scalar Scalar::int_like(long v) const {
    Scalar s = *this;
    if (kind_ == ScalarKind::Rational)
        s.q_ = v;
    else
        s.d_ = static_cast<double>(v);
    return s;
}

std::string Scalar::str() const {
    if (kind_ == ScalarKind::Rational) return q_.get_str();
    // Shortest decimal that round-trips to the same double.
    for (int prec = 1; prec <= 17; ++prec) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*g", prec, d_);
        if (std::strtod(buf, nullptr) == d_) return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d_);
    return buf;
}

double Scalar::to_double() const {
    if (kind_ == ScalarKind::Rational) return q_.get_d();
    return d_;
}

const mpq_class& Scalar::rat() const {
    if (kind_ != ScalarKind::Rational)
        throw std::logic_error("scalar: rat() on a float value");
    return q_;
}

bool exact_sqrt(const Scalar& x, Scalar& out) {
    if (x.is_negative()) return false;
    if (x.kind() == ScalarKind::Float) {
        out = Scalar::floating(std::sqrt(x.to_double()));
        return true;
    }
    const mpq_class& q = x.rat();
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Scalar::rational(mpq_class(rn, rd));
    return true;
}

}  // namespace rplie
