#pragma once

#include "trop/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trop {

// Element of the tropical hyperfield: a nonnegative rational magnitude.
// Multiplication is ordinary, the (hyper)addition lives in hyperfield.hpp.
class TropValue {
public:
    TropValue() : v_(0) {}
    explicit TropValue(Rational v);
    TropValue(long n, long d) : TropValue(Rational(n, d)) {}

    static TropValue zero() { return TropValue(); }
    static TropValue one() { return TropValue(Rational(1)); }

    const Rational& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    TropValue operator*(const TropValue& o) const { return TropValue(v_ * o.v_); }
    TropValue& operator*=(const TropValue& o) { v_ *= o.v_; return *this; }

    // Exact power; negative exponents require a nonzero value.
    TropValue pow(long e) const { return TropValue(v_.pow(e)); }

    bool operator==(const TropValue& o) const { return v_ == o.v_; }
    bool operator!=(const TropValue& o) const { return v_ != o.v_; }
    bool operator<(const TropValue& o) const { return v_ < o.v_; }
    bool operator<=(const TropValue& o) const { return v_ <= o.v_; }
    bool operator>(const TropValue& o) const { return v_ > o.v_; }
    bool operator>=(const TropValue& o) const { return v_ >= o.v_; }

    std::string to_fraction_string() const { return v_.to_fraction_string(); }
    std::string to_short_string() const { return v_.to_short_string(); }

private:
    Rational v_;
};

TropValue max(const TropValue& a, const TropValue& b);

// A multiplicative valuation on Q: either the trivial one or a p-adic one.
class Valuation {
public:
    enum class Kind { Trivial, Padic };

    static Valuation trivial() { return Valuation(Kind::Trivial, 0); }
    // Throws std::invalid_argument unless p is prime.
    static Valuation padic(long p);

    Kind kind() const { return kind_; }
    long prime() const { return prime_; }

    bool operator==(const Valuation& o) const = default;

    // "trivial" or "padic:<p>", matching the CLI syntax.
    std::string to_string() const;
    static Valuation from_string(std::string_view text);

private:
    Valuation(Kind k, long p) : kind_(k), prime_(p) {}
    Kind kind_;
    long prime_;
};

// p-adic order of a rational: ord_p(num) - ord_p(den).  The order of zero is
// +infinity, reported as std::nullopt (a distinct tag, never a sentinel int).
std::optional<long> padic_order(const Rational& a, long p);

// |a| under the valuation: trivially 0 or 1, or p^(-ord_p(a)) exactly.
TropValue apply_valuation(const Valuation& v, const Rational& a);

// Result of auditing the seminorm axioms on a sample:
//   v(0)=0, v(1)=1, v(ab)=v(a)v(b), v(a+b) <= max(v(a),v(b)),
// plus, for each supplied decomposition a = b1+...+bn, the strong triangular
// shape: the maximum of v(a), v(b1), ..., v(bn) is attained at least twice.
struct SeminormCheck {
    std::size_t pairs_checked = 0;
    std::size_t decompositions_checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

SeminormCheck check_seminorm_axioms(
    const Valuation& v,
    std::span<const std::pair<Rational, Rational>> pairs,
    std::span<const std::vector<Rational>> decompositions = {});

}  // namespace trop
