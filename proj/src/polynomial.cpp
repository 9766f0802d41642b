#include "trop/polynomial.hpp"

#include <stdexcept>

namespace trop {

void FieldPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.num_vars() != sig_.num_vars)
        throw std::invalid_argument("polynomial: monomial has " +
                                    std::to_string(m.num_vars()) + " variables, expected " +
                                    std::to_string(sig_.num_vars));
    if (!sig_.laurent) {
        for (int e : m.exponents())
            if (e < 0)
                throw std::invalid_argument(
                    "polynomial: negative exponent in non-Laurent signature");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldPolynomial FieldPolynomial::operator+(const FieldPolynomial& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("polynomial +: signature mismatch");
    FieldPolynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

FieldPolynomial FieldPolynomial::operator-() const {
    FieldPolynomial out(sig_);
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
}

FieldPolynomial FieldPolynomial::operator-(const FieldPolynomial& o) const {
    return *this + (-o);
}

FieldPolynomial FieldPolynomial::operator*(const FieldPolynomial& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("polynomial *: signature mismatch");
    FieldPolynomial out(sig_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

std::string FieldPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        std::string piece;
        if (m.is_unit()) {
            piece = mag.to_short_string();
        } else if (mag == Rational(1)) {
            piece = m.to_string();
        } else {
            piece = mag.to_short_string() + "*" + m.to_string();
        }
        if (out.empty()) {
            out = (neg ? "-" : "") + piece;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

FieldFormalSum to_formal_sum(const FieldPolynomial& p) {
    FieldFormalSum out;
    for (const auto& [m, c] : p.terms()) out.add_term(FieldTerm{c, m});
    return out;
}

TropFormalSum tropicalize_poly(const FieldPolynomial& p, const Valuation& v) {
    TropFormalSum out;
    for (const auto& [m, c] : p.terms())
        out.add_term(TropTerm{apply_valuation(v, c), m});
    return out;
}

TropValue eval_term(const TropTerm& t, const TropPoint& x) {
    if (x.num_vars() != t.mono.num_vars())
        throw std::invalid_argument("eval: point has " + std::to_string(x.num_vars()) +
                                    " coordinates, monomial expects " +
                                    std::to_string(t.mono.num_vars()));
    TropValue out = t.coeff;
    for (int i = 0; i < t.mono.num_vars(); ++i) {
        int e = t.mono.exponent(i);
        if (e == 0) continue;
        if (x.coord(i).is_zero() && e < 0)
            throw std::domain_error("eval: zero coordinate raised to negative power");
        out *= x.coord(i).pow(e);
    }
    return out;
}

std::vector<TropValue> eval_trop(const TropFormalSum& p, const TropPoint& x) {
    std::vector<TropValue> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.push_back(eval_term(t, x));
    return out;
}

}  // namespace trop
