#pragma once

#include "trop/monomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

// One coefficient-times-monomial term.  Coeff is Rational or TropValue.
template <typename Coeff>
struct Term {
    Coeff coeff;
    Monomial mono;

    bool operator==(const Term& o) const = default;

    std::string to_string() const {
        std::string c = coeff.to_short_string();
        if (mono.is_unit()) return c;
        if (c == "1") return mono.to_string();
        if (c == "-1") return "-" + mono.to_string();
        return c + "*" + mono.to_string();
    }
};

// Canonical term order: graded-lex descending on the monomial, then
// descending coefficient.  Equal terms sit adjacent, preserving multiplicity.
template <typename Coeff>
bool term_before(const Term<Coeff>& a, const Term<Coeff>& b) {
    if (a.mono != b.mono) return graded_lex_less(b.mono, a.mono);
    return b.coeff < a.coeff;
}

// A finite formal sum of terms, kept as a *multiset*: repeated terms are
// preserved, never collected.  Always stored in canonical order, so multiset
// equality is plain vector equality.  Zero-coefficient terms are dropped on
// insertion; the empty sum denotes 0.
template <typename Coeff>
class FormalSum {
public:
    FormalSum() = default;

    static FormalSum zero() { return FormalSum(); }

    static FormalSum single(Term<Coeff> t) {
        FormalSum s;
        s.add_term(std::move(t));
        return s;
    }

    const std::vector<Term<Coeff>>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const Term<Coeff>& term(std::size_t i) const { return terms_.at(i); }

    void add_term(Term<Coeff> t) {
        if (t.coeff == Coeff()) return;  // drop zero terms
        auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                                   term_before<Coeff>);
        terms_.insert(it, std::move(t));
    }

    // Multiset union (formal addition, no collection).
    FormalSum plus(const FormalSum& o) const {
        FormalSum out = *this;
        for (const auto& t : o.terms_) out.add_term(t);
        return out;
    }

    // Multiply every term by t (termwise product of coefficient and monomial).
    FormalSum times_term(const Term<Coeff>& t) const {
        FormalSum out;
        for (const auto& s : terms_)
            out.add_term(Term<Coeff>{s.coeff * t.coeff, s.mono * t.mono});
        return out;
    }

    // Remove one occurrence of t; throws std::invalid_argument if absent.
    FormalSum minus_one(const Term<Coeff>& t) const {
        FormalSum out = *this;
        auto it = std::find(out.terms_.begin(), out.terms_.end(), t);
        if (it == out.terms_.end())
            throw std::invalid_argument("formal sum: term " + t.to_string() +
                                        " not present");
        out.terms_.erase(it);
        return out;
    }

    // Remove the i-th term in canonical order.
    FormalSum without_index(std::size_t i) const {
        if (i >= terms_.size())
            throw std::invalid_argument("formal sum: term index out of range");
        FormalSum out = *this;
        out.terms_.erase(out.terms_.begin() + static_cast<std::ptrdiff_t>(i));
        return out;
    }

    bool operator==(const FormalSum& o) const = default;
    bool operator<(const FormalSum& o) const {
        return std::lexicographical_compare(
            terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
            term_before<Coeff>);
    }

    // "+"-joined terms in canonical order; the empty sum renders as "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            if (!out.empty()) out += " + ";
            out += t.to_string();
        }
        return out;
    }

private:
    std::vector<Term<Coeff>> terms_;
};

}  // namespace trop
