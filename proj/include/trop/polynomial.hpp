#pragma once

#include "trop/formal_sum.hpp"
#include "trop/monomial.hpp"
#include "trop/point.hpp"
#include "trop/rational.hpp"
#include "trop/valuation.hpp"

#include <map>
#include <string>
#include <vector>

namespace trop {

using FieldTerm = Term<Rational>;
using TropTerm = Term<TropValue>;
using FieldFormalSum = FormalSum<Rational>;
using TropFormalSum = FormalSum<TropValue>;

// A polynomial (or Laurent polynomial) over Q with collected terms: one
// rational coefficient per monomial, zero coefficients never stored.
class FieldPolynomial {
public:
    explicit FieldPolynomial(MonoidSignature sig) : sig_(sig) {}

    static FieldPolynomial zero(MonoidSignature sig) { return FieldPolynomial(sig); }

    const MonoidSignature& signature() const { return sig_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    // Collects into the existing coefficient; validates the monomial against
    // the signature (variable count, Laurent policy).
    void add_term(const Monomial& m, const Rational& c);

    // Terms in canonical order (graded-lex descending monomials).
    const std::map<Monomial, Rational, GradedLexDescending>& terms() const { return terms_; }

    FieldPolynomial operator+(const FieldPolynomial& o) const;
    FieldPolynomial operator-(const FieldPolynomial& o) const;
    FieldPolynomial operator*(const FieldPolynomial& o) const;
    FieldPolynomial operator-() const;

    bool operator==(const FieldPolynomial& o) const = default;

    // Canonical text form, parseable by parse_polynomial: terms in
    // graded-lex descending order joined with " + " / " - ".
    std::string to_string() const;

private:
    MonoidSignature sig_;
    std::map<Monomial, Rational, GradedLexDescending> terms_;
};

// The uncollected formal-sum view of a collected polynomial (one term per
// stored monomial, in canonical order).
FieldFormalSum to_formal_sum(const FieldPolynomial& p);

// Coefficient-wise image under the valuation: each term c*x^a becomes
// v(c)*x^a.  Terms are kept as a multiset; distinct coefficients can map to
// equal magnitudes, and both copies must survive.
TropFormalSum tropicalize_poly(const FieldPolynomial& p, const Valuation& v);

// Value of one tropical term at a point: c * prod_i x_i^{e_i}.  Negative
// exponents at a zero coordinate have no value; throws std::domain_error.
TropValue eval_term(const TropTerm& t, const TropPoint& x);

// The multiset of term values of p at x, in term order.
std::vector<TropValue> eval_trop(const TropFormalSum& p, const TropPoint& x);

}  // namespace trop
