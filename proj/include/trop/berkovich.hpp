#pragma once

#include "trop/polynomial.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trop {

// A multiplicative seminorm on the univariate polynomial ring over a
// trivially valued ground field, drawn from the standard catalog:
//
//   TrivialNorm        w(g) = 1 for g != 0
//   FAdic(f, r)        w(g) = r^m, m the multiplicity of f in g, 0 < r < 1
//   FAdicZero(f)       the r -> 0 endpoint: w(g) = 1 if f does not divide g,
//                      else 0
//   InfinityAdic(r)    w(g) = r^(-deg g), 0 < r < 1
//
// f must be monic and nonconstant; for FAdic seminorms it should be
// irreducible (see irreducibility_lint, which is advisory only).
class SeminormDescriptor {
public:
    enum class Kind { TrivialNorm, FAdic, FAdicZero, InfinityAdic };

    static SeminormDescriptor trivial_norm();
    static SeminormDescriptor f_adic(FieldPolynomial f, Rational r);
    static SeminormDescriptor f_adic_zero(FieldPolynomial f);
    static SeminormDescriptor infinity_adic(Rational r);

    Kind kind() const { return kind_; }
    const FieldPolynomial& f() const;
    const Rational& radius() const;

    bool operator==(const SeminormDescriptor& o) const = default;

    // "trivial", "fadic(T1^2+1; 1/2)", "fadic0(T1)", "infinity(1/2)".
    std::string to_string() const;

private:
    SeminormDescriptor(Kind k, FieldPolynomial f, Rational r)
        : kind_(k), f_(std::move(f)), r_(std::move(r)) {}

    Kind kind_;
    FieldPolynomial f_;
    Rational r_;
};

// Exact value of the seminorm on a univariate polynomial (never Laurent).
TropValue eval_seminorm(const SeminormDescriptor& w, const FieldPolynomial& g);

// Audit of the seminorm axioms on sample pairs: w(0)=0, w(1)=1,
// w(gh)=w(g)w(h), w(g+h) <= max(w(g), w(h)).
struct SeminormAudit {
    std::size_t pairs_checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

SeminormAudit check_is_seminorm(
    const SeminormDescriptor& w,
    std::span<const std::pair<FieldPolynomial, FieldPolynomial>> pairs);

// Image of the seminorm on the contracted line k[T1,T2]/(T1+T2+1) under
// T1 -> T, T2 -> -T-1: the tropical point (w(T), w(T+1)).  nontrivial means
// the point differs from (1,1); on_line records membership in the tropical
// line (largest of u1, u2, 1 attained twice).
struct LineTropImage {
    TropValue u1;
    TropValue u2;
    bool nontrivial = false;
    bool on_line = false;
};

LineTropImage line_trop_image(const SeminormDescriptor& w);

// Cheap irreducibility screen over Q: degree 1 is irreducible; degrees 2 and
// 3 are irreducible exactly when they have no rational root; higher degrees
// report reducible on a found root and inconclusive (nullopt) otherwise.
// Oversized coefficients also yield nullopt.  Advisory, not a guarantee.
std::optional<bool> irreducibility_lint(const FieldPolynomial& f);

// The seminorms exercised by default: the trivial norm, FAdic and FAdicZero
// at T1, T1+1, T1-2, T1^2+1, T1^2+T1+1, and InfinityAdic, radius r where one
// is needed.
std::vector<SeminormDescriptor> default_catalog(const Rational& r);

// Exact division helpers on univariate polynomials (exposed for tests).
// divmod returns (quotient, remainder) with deg rem < deg divisor; the
// divisor must be nonzero.
std::pair<FieldPolynomial, FieldPolynomial> poly_divmod(const FieldPolynomial& num,
                                                        const FieldPolynomial& den);
// Largest m with f^m dividing g; g must be nonzero, f nonconstant.
int poly_multiplicity(const FieldPolynomial& g, const FieldPolynomial& f);
long poly_degree(const FieldPolynomial& p);  // degree, -1 for the zero polynomial

}  // namespace trop
