#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace trop {

// Exact rational number backed by GMP, kept in canonical form at all times:
// denominator > 0, gcd(num, den) == 1, zero is 0/1.  All arithmetic and
// comparisons are exact; there is no floating point anywhere in the core.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Parses "num" or "num/den" with optional leading '-'.  Throws
    // std::invalid_argument on malformed input or a zero denominator.
    static Rational from_string(std::string_view text);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    // Exact integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    // Always "num/den", e.g. "3/2", "-1/3", "0/1".  Used by every file format.
    std::string to_fraction_string() const;
    // "num" when the denominator is 1, otherwise "num/den".  Used in
    // polynomial text and human-facing output.
    std::string to_short_string() const;

    // Decimal approximation with the given number of fractional digits,
    // round-half-away-from-zero.  For plot output only.
    std::string to_decimal_string(int digits) const;

    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace trop
