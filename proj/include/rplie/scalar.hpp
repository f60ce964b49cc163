#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rplie {

/// The two number fields a session can run over. All values taking part in a
/// computation must live in the same field; mixing kinds throws.
enum class ScalarKind { Rational, Float };

ScalarKind session_kind();
double session_epsilon();
void set_session(ScalarKind kind, double epsilon = 1e-9);

/// A field element: an exact rational (arbitrary precision) or a double
/// compared against the session tolerance.
class Scalar {
public:
    Scalar() : Scalar(0L) {}
    explicit Scalar(long v);
    static Scalar from_int(long v) { return Scalar(v); }
    static Scalar ratio(long num, long den);
    static Scalar rational(mpq_class q);
    static Scalar floating(double d);

    /// Parses "p/q", an integer, or a decimal literal ("0.25" is exact in
    /// rational mode). Throws std::invalid_argument on malformed input.
    static Scalar parse(const std::string& text);

    ScalarKind kind() const { return kind_; }
    bool is_zero() const;
    bool is_negative() const;
    bool is_positive() const { return !is_zero() && !is_negative(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend Scalar operator*(Scalar a, long b) { return a *= a.int_like(b); }
    friend Scalar operator*(long a, Scalar b) { return b *= b.int_like(a); }
    friend Scalar operator/(Scalar a, long b) { return a /= a.int_like(b); }

    /// Tolerance-aware in float mode, exact in rational mode.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Strict order (no tolerance); used for pivoting and admissibility.
    bool less_than(const Scalar& o) const;

    Scalar abs() const;
    /// An integer constant in the same field as *this.
    Scalar int_like(long v) const;

    /// "p/q" (or plain integer) in rational mode, shortest round-trip decimal
    /// in float mode.
    std::string str() const;
    double to_double() const;
    const mpq_class& rat() const;

private:
    ScalarKind kind_;
    mpq_class q_;
    double d_ = 0.0;

    void check_same_kind(const Scalar& o) const;
};

/// Exact square root when the argument is a perfect square of the field
/// (rational mode); plain sqrt in float mode. Returns false if no root exists.
bool exact_sqrt(const Scalar& x, Scalar& out);

}  // namespace rplie
