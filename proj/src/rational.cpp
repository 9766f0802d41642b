#include "trop/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace trop {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    // Accept an optional sign, digits, and an optional "/digits" tail.
    // mpq_class's own string constructor accepts whitespace and leading
    // zeros in ways we don't want to round-trip, so validate first.
    std::size_t i = 0;
    auto fail = [&](const char* why) -> Rational {
        throw std::invalid_argument(std::string("rational: ") + why + " in \"" +
                                    std::string(text) + "\"");
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) return fail("expected digits");
    if (i < text.size()) {
        if (text[i] != '/') return fail("unexpected character");
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start) return fail("expected denominator digits");
        if (i != text.size()) return fail("unexpected character");
    }
    std::string cleaned(text);
    if (cleaned.front() == '+') cleaned.erase(0, 1);  // mpq_set_str rejects '+'
    mpq_class q(cleaned, 10);
    if (q.get_den() == 0) return fail("zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("rational: 0 to a negative power");
        return Rational(0);
    }
    mpz_class num, den;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), k);
    mpq_class out = (e > 0) ? mpq_class(num, den) : mpq_class(den, num);
    out.canonicalize();
    return Rational(std::move(out));
}

std::string Rational::to_fraction_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_short_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return to_fraction_string();
}

std::string Rational::to_decimal_string(int digits) const {
    if (digits < 0) throw std::invalid_argument("rational: negative precision");
    // Round |num| * 10^digits / den half away from zero, then place the point.
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = q_.get_num() * scale;
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class den = q_.get_den();
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den) quot += 1;
    std::string s = quot.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (neg && s.find_first_not_of("0.") != std::string::npos) s.insert(0, "-");
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_short_string();
}

}  // namespace trop
