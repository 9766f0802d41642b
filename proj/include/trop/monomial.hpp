#pragma once

#include <string>
#include <vector>

namespace trop {

// Shape of the variable monoid: how many variables, and whether negative
// exponents (Laurent monomials) are allowed.
struct MonoidSignature {
    int num_vars = 1;
    bool laurent = false;

    bool operator==(const MonoidSignature& o) const = default;
};

// A monomial T1^e1 * ... * Tn^en, stored as its exponent vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    // The unit monomial (all exponents zero) in n variables.
    static Monomial unit(int num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }

    const std::vector<int>& exponents() const { return exps_; }
    int num_vars() const { return static_cast<int>(exps_.size()); }
    int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    bool is_unit() const;
    long degree() const;

    // Throws std::invalid_argument on mismatched variable counts.
    Monomial operator*(const Monomial& o) const;

    bool operator==(const Monomial& o) const = default;

    // "T1^2*T3" style; the unit monomial renders as "1".
    std::string to_string() const;

private:
    std::vector<int> exps_;
};

// Graded lexicographic order: compare total degree first, then exponent
// vectors lexicographically.  Returns true when a precedes b (a is smaller).
bool graded_lex_less(const Monomial& a, const Monomial& b);

// Canonical display/storage order puts the graded-lex largest monomial first.
struct GradedLexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return graded_lex_less(b, a);
    }
};

}  // namespace trop
