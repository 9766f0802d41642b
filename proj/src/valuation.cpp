#include "trop/valuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace trop {

TropValue::TropValue(Rational v) : v_(std::move(v)) {
    if (v_.sign() < 0)
        throw std::invalid_argument("tropical value must be nonnegative, got " +
                                    v_.to_short_string());
}

TropValue max(const TropValue& a, const TropValue& b) {
    return (a < b) ? b : a;
}

Valuation Valuation::padic(long p) {
    if (p < 2) throw std::invalid_argument("padic valuation: prime must be >= 2");
    mpz_class z(p);
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("padic valuation: " + std::to_string(p) +
                                    " is not prime");
    return Valuation(Kind::Padic, p);
}

std::string Valuation::to_string() const {
    if (kind_ == Kind::Trivial) return "trivial";
    return "padic:" + std::to_string(prime_);
}

Valuation Valuation::from_string(std::string_view text) {
    if (text == "trivial") return trivial();
    constexpr std::string_view prefix = "padic:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string tail(text.substr(prefix.size()));
        std::size_t used = 0;
        long p = 0;
        try {
            p = std::stol(tail, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == tail.size() && used > 0) return padic(p);
    }
    throw std::invalid_argument("valuation: expected \"trivial\" or \"padic:<p>\", got \"" +
                                std::string(text) + "\"");
}

std::optional<long> padic_order(const Rational& a, long p) {
    if (p < 2) throw std::invalid_argument("padic order: prime must be >= 2");
    if (a.is_zero()) return std::nullopt;  // ord_p(0) = +infinity
    mpz_class prime(p), stripped;
    mp_bitcnt_t ord_num =
        mpz_remove(stripped.get_mpz_t(), a.numerator().get_mpz_t(), prime.get_mpz_t());
    mp_bitcnt_t ord_den =
        mpz_remove(stripped.get_mpz_t(), a.denominator().get_mpz_t(), prime.get_mpz_t());
    return static_cast<long>(ord_num) - static_cast<long>(ord_den);
}

TropValue apply_valuation(const Valuation& v, const Rational& a) {
    if (a.is_zero()) return TropValue::zero();
    if (v.kind() == Valuation::Kind::Trivial) return TropValue::one();
    long ord = *padic_order(a, v.prime());
    return TropValue(Rational(v.prime()).pow(-ord));
}

SeminormCheck check_seminorm_axioms(
    const Valuation& v,
    std::span<const std::pair<Rational, Rational>> pairs,
    std::span<const std::vector<Rational>> decompositions) {
    SeminormCheck out;
    auto complain = [&out](std::string msg) { out.violations.push_back(std::move(msg)); };

    if (!apply_valuation(v, Rational(0)).is_zero())
        complain("v(0) != 0");
    if (apply_valuation(v, Rational(1)) != TropValue::one())
        complain("v(1) != 1");

    for (const auto& [a, b] : pairs) {
        ++out.pairs_checked;
        TropValue va = apply_valuation(v, a);
        TropValue vb = apply_valuation(v, b);
        if (apply_valuation(v, a * b) != va * vb)
            complain("v(ab) != v(a)v(b) at a=" + a.to_fraction_string() +
                     " b=" + b.to_fraction_string());
        if (apply_valuation(v, a + b) > max(va, vb))
            complain("v(a+b) > max(v(a),v(b)) at a=" + a.to_fraction_string() +
                     " b=" + b.to_fraction_string());
    }

    for (const auto& parts : decompositions) {
        ++out.decompositions_checked;
        Rational sum(0);
        std::vector<TropValue> vals;
        vals.reserve(parts.size() + 1);
        for (const Rational& b : parts) {
            sum += b;
            vals.push_back(apply_valuation(v, b));
        }
        vals.push_back(apply_valuation(v, sum));
        TropValue top = TropValue::zero();
        for (const TropValue& t : vals) top = max(top, t);
        std::size_t hits = 0;
        for (const TropValue& t : vals)
            if (t == top) ++hits;
        // With every term zero the maximum 0 is attained by v(sum) and the
        // terms alike; require two attainments only when something is nonzero.
        if (!top.is_zero() && hits < 2) {
            std::string where;
            for (const Rational& b : parts) {
                if (!where.empty()) where += ",";
                where += b.to_fraction_string();
            }
            complain("strong triangle: max attained once for decomposition [" + where + "]");
        }
    }
    return out;
}

}  // namespace trop
