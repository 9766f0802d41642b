#include "trop/parse.hpp"

#include <cctype>
#include <vector>

namespace trop {

namespace {

constexpr long kMaxExponent = 1000000;

// Hand-rolled scanner over the input; keeps a cursor for error reporting.
class PolyScanner {
public:
    PolyScanner(std::string_view text, const MonoidSignature& sig)
        : text_(text), sig_(sig) {}

    // Parses the whole input into an uncollected term list.
    std::vector<FieldTerm> parse_terms() {
        std::vector<FieldTerm> terms;
        skip_space();
        if (at_end()) fail("empty input", "a polynomial");
        bool negative = take_sign(false);
        terms.push_back(parse_term(negative));
        skip_space();
        while (!at_end()) {
            bool neg = take_sign(true);
            terms.push_back(parse_term(neg));
            skip_space();
        }
        return terms;
    }

private:
    [[noreturn]] void fail(const std::string& message, const std::string& expected) const {
        throw ParseError(message, pos_, expected);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // Consumes a leading '+' or '-'.  When required, its absence is an error.
    bool take_sign(bool required) {
        skip_space();
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            return neg;
        }
        if (required) fail("unexpected input", "'+' or '-' between terms");
        return false;
    }

    bool at_digit() const {
        return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
    }

    bool at_variable() const {
        if (at_end()) return false;
        char c = peek();
        if (c == 'T') return true;
        return (c == 'x' || c == 'y' || c == 'z') && sig_.num_vars <= 3;
    }

    mpz_class parse_digits(const std::string& what) {
        skip_space();
        if (!at_digit()) fail("malformed " + what, "digits");
        std::string digits;
        while (at_digit()) digits += text_[pos_++];
        return mpz_class(digits);
    }

    Rational parse_rational() {
        mpz_class num = parse_digits("coefficient");
        mpz_class den = 1;
        if (!at_end() && peek() == '/') {
            ++pos_;
            den = parse_digits("coefficient denominator");
            if (den == 0) fail("zero denominator", "a nonzero denominator");
        }
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    }

    long parse_exponent() {
        skip_space();
        bool neg = false;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            neg = peek() == '-';
            ++pos_;
        }
        mpz_class digits = parse_digits("exponent");
        if (digits > kMaxExponent) fail("exponent too large", "a smaller exponent");
        long e = digits.get_si();
        return neg ? -e : e;
    }

    // One variable reference, returning its 0-based index.
    int parse_variable() {
        std::size_t at = pos_;
        char c = peek();
        int index;
        if (c == 'T') {
            ++pos_;
            mpz_class digits = parse_digits("variable index");
            if (digits < 1 || digits > sig_.num_vars) {
                pos_ = at;
                fail("variable T" + digits.get_str() + " out of range",
                     "an index between 1 and " + std::to_string(sig_.num_vars));
            }
            index = static_cast<int>(digits.get_si()) - 1;
        } else {
            index = (c == 'x') ? 0 : (c == 'y') ? 1 : 2;
            if (index >= sig_.num_vars)
                fail(std::string("variable '") + c + "' out of range",
                     "a variable among the first " + std::to_string(sig_.num_vars));
            ++pos_;
        }
        return index;
    }

    // factor := var ['^' integer]
    void parse_factor(std::vector<int>& exps) {
        int index = parse_variable();
        long e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
            ++pos_;
            e = parse_exponent();
        }
        if (e < 0 && !sig_.laurent)
            fail("negative exponent", "a nonnegative exponent (signature is not Laurent)");
        long combined = exps[static_cast<std::size_t>(index)] + e;
        if (combined > kMaxExponent || combined < -kMaxExponent)
            fail("exponent too large", "a smaller exponent");
        exps[static_cast<std::size_t>(index)] = static_cast<int>(combined);
    }

    FieldTerm parse_term(bool negative) {
        skip_space();
        Rational coeff(1);
        bool saw_coeff = false;
        if (at_digit()) {
            coeff = parse_rational();
            saw_coeff = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_space();
                if (!at_variable()) fail("dangling '*'", "a variable");
            }
        }
        std::vector<int> exps(static_cast<std::size_t>(sig_.num_vars), 0);
        bool saw_factor = false;
        skip_space();
        while (at_variable()) {
            parse_factor(exps);
            saw_factor = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_space();
                if (!at_variable()) fail("dangling '*'", "a variable");
            }
        }
        if (!saw_coeff && !saw_factor) fail("malformed term", "a coefficient or a variable");
        if (negative) coeff = -coeff;
        // A final negative-exponent check is unnecessary: parse_factor already
        // enforced the Laurent policy per factor, and sums of allowed
        // exponents stay allowed for non-Laurent (all nonnegative).
        return FieldTerm{coeff, Monomial(std::move(exps))};
    }

    std::string_view text_;
    const MonoidSignature& sig_;
    std::size_t pos_ = 0;
};

}  // namespace

FieldPolynomial parse_polynomial(std::string_view text, const MonoidSignature& sig) {
    if (sig.num_vars < 1)
        throw std::invalid_argument("parse: signature needs at least one variable");
    PolyScanner scanner(text, sig);
    FieldPolynomial out(sig);
    for (auto& t : scanner.parse_terms()) out.add_term(t.mono, t.coeff);
    return out;
}

TropFormalSum parse_trop_sum(std::string_view text, const MonoidSignature& sig) {
    if (sig.num_vars < 1)
        throw std::invalid_argument("parse: signature needs at least one variable");
    PolyScanner scanner(text, sig);
    TropFormalSum out;
    for (auto& t : scanner.parse_terms()) {
        if (t.coeff.sign() < 0)
            throw ParseError("negative coefficient in tropical sum", 0,
                             "nonnegative coefficients");
        out.add_term(TropTerm{TropValue(t.coeff), t.mono});
    }
    return out;
}

}  // namespace trop
