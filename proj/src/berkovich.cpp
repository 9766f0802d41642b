#include "trop/berkovich.hpp"

#include "trop/hyperfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace trop {

namespace {

const MonoidSignature kUnivariate{1, false};

void require_univariate(const FieldPolynomial& p, const char* what) {
    if (p.signature() != kUnivariate)
        throw std::invalid_argument(std::string(what) +
                                    ": expected a univariate (non-Laurent) polynomial");
}

// Dense coefficient vector, index = exponent; empty for the zero polynomial.
std::vector<Rational> to_dense(const FieldPolynomial& p) {
    std::vector<Rational> out;
    for (const auto& [m, c] : p.terms()) {
        std::size_t e = static_cast<std::size_t>(m.exponent(0));
        if (out.size() <= e) out.resize(e + 1, Rational(0));
        out[e] = c;
    }
    return out;
}

FieldPolynomial from_dense(const std::vector<Rational>& coeffs) {
    FieldPolynomial out(kUnivariate);
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        out.add_term(Monomial({static_cast<int>(e)}), coeffs[e]);
    return out;
}

Rational leading_coefficient(const FieldPolynomial& p) {
    if (p.is_zero()) return Rational(0);
    return p.terms().begin()->second;  // canonical order puts the top degree first
}

bool is_monic_nonconstant(const FieldPolynomial& f) {
    return poly_degree(f) >= 1 && leading_coefficient(f) == Rational(1);
}

// All positive divisors of n (n > 0), unsorted.
std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::vector<mpz_class> low, high;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            low.push_back(d);
            if (d * d != n) high.push_back(n / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

Rational eval_at(const FieldPolynomial& p, const Rational& x) {
    // Horner on the dense form.
    std::vector<Rational> c = to_dense(p);
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

long poly_degree(const FieldPolynomial& p) {
    if (p.is_zero()) return -1;
    return p.terms().begin()->first.degree();
}

std::pair<FieldPolynomial, FieldPolynomial> poly_divmod(const FieldPolynomial& num,
                                                        const FieldPolynomial& den) {
    require_univariate(num, "divmod");
    require_univariate(den, "divmod");
    if (den.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    std::vector<Rational> r = to_dense(num);
    std::vector<Rational> d = to_dense(den);
    std::size_t dd = d.size() - 1;
    Rational lead = d[dd];
    std::vector<Rational> q(r.size() > dd ? r.size() - dd : 0, Rational(0));
    for (std::size_t i = r.size(); i-- > dd;) {
        if (r[i].is_zero()) continue;
        Rational factor = r[i] / lead;
        q[i - dd] = factor;
        for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] -= factor * d[j];
    }
    return {from_dense(q), from_dense(r)};
}

int poly_multiplicity(const FieldPolynomial& g, const FieldPolynomial& f) {
    require_univariate(g, "multiplicity");
    require_univariate(f, "multiplicity");
    if (g.is_zero()) throw std::invalid_argument("multiplicity: zero polynomial");
    if (poly_degree(f) < 1)
        throw std::invalid_argument("multiplicity: divisor must be nonconstant");
    int m = 0;
    FieldPolynomial cur = g;
    for (;;) {
        auto [quot, rem] = poly_divmod(cur, f);
        if (!rem.is_zero()) return m;
        ++m;
        cur = std::move(quot);
    }
}

SeminormDescriptor SeminormDescriptor::trivial_norm() {
    return SeminormDescriptor(Kind::TrivialNorm, FieldPolynomial::zero(kUnivariate),
                              Rational(1));
}

SeminormDescriptor SeminormDescriptor::f_adic(FieldPolynomial f, Rational r) {
    if (!is_monic_nonconstant(f))
        throw std::invalid_argument("seminorm: f must be monic and nonconstant");
    if (!(Rational(0) < r && r < Rational(1)))
        throw std::invalid_argument(
            "seminorm: radius must satisfy 0 < r < 1 (r = 1 is the trivial norm)");
    return SeminormDescriptor(Kind::FAdic, std::move(f), std::move(r));
}

SeminormDescriptor SeminormDescriptor::f_adic_zero(FieldPolynomial f) {
    if (!is_monic_nonconstant(f))
        throw std::invalid_argument("seminorm: f must be monic and nonconstant");
    return SeminormDescriptor(Kind::FAdicZero, std::move(f), Rational(0));
}

SeminormDescriptor SeminormDescriptor::infinity_adic(Rational r) {
    if (!(Rational(0) < r && r < Rational(1)))
        throw std::invalid_argument(
            "seminorm: radius must satisfy 0 < r < 1 (r = 1 is the trivial norm)");
    return SeminormDescriptor(Kind::InfinityAdic, FieldPolynomial::zero(kUnivariate),
                              std::move(r));
}

const FieldPolynomial& SeminormDescriptor::f() const {
    if (kind_ != Kind::FAdic && kind_ != Kind::FAdicZero)
        throw std::logic_error("seminorm: this kind carries no polynomial");
    return f_;
}

const Rational& SeminormDescriptor::radius() const {
    if (kind_ != Kind::FAdic && kind_ != Kind::InfinityAdic)
        throw std::logic_error("seminorm: this kind carries no radius");
    return r_;
}

std::string SeminormDescriptor::to_string() const {
    switch (kind_) {
        case Kind::TrivialNorm:
            return "trivial";
        case Kind::FAdic:
            return "fadic(" + f_.to_string() + "; " + r_.to_short_string() + ")";
        case Kind::FAdicZero:
            return "fadic0(" + f_.to_string() + ")";
        case Kind::InfinityAdic:
            return "infinity(" + r_.to_short_string() + ")";
    }
    return "?";
}

TropValue eval_seminorm(const SeminormDescriptor& w, const FieldPolynomial& g) {
    require_univariate(g, "seminorm");
    if (g.is_zero()) return TropValue::zero();
    switch (w.kind()) {
        case SeminormDescriptor::Kind::TrivialNorm:
            return TropValue::one();
        case SeminormDescriptor::Kind::FAdic:
            return TropValue(w.radius().pow(poly_multiplicity(g, w.f())));
        case SeminormDescriptor::Kind::FAdicZero:
            return poly_multiplicity(g, w.f()) == 0 ? TropValue::one() : TropValue::zero();
        case SeminormDescriptor::Kind::InfinityAdic:
            return TropValue(w.radius().pow(-poly_degree(g)));
    }
    throw std::logic_error("seminorm: unknown kind");
}

SeminormAudit check_is_seminorm(
    const SeminormDescriptor& w,
    std::span<const std::pair<FieldPolynomial, FieldPolynomial>> pairs) {
    SeminormAudit out;
    auto complain = [&out](std::string msg) { out.violations.push_back(std::move(msg)); };

    if (!eval_seminorm(w, FieldPolynomial::zero(kUnivariate)).is_zero())
        complain("w(0) != 0");
    FieldPolynomial one(kUnivariate);
    one.add_term(Monomial::unit(1), Rational(1));
    if (eval_seminorm(w, one) != TropValue::one()) complain("w(1) != 1");

    for (const auto& [g, h] : pairs) {
        ++out.pairs_checked;
        TropValue wg = eval_seminorm(w, g);
        TropValue wh = eval_seminorm(w, h);
        if (eval_seminorm(w, g * h) != wg * wh)
            complain("w(gh) != w(g)w(h) at g=" + g.to_string() + ", h=" + h.to_string());
        if (eval_seminorm(w, g + h) > max(wg, wh))
            complain("w(g+h) > max(w(g),w(h)) at g=" + g.to_string() +
                     ", h=" + h.to_string());
    }
    return out;
}

LineTropImage line_trop_image(const SeminormDescriptor& w) {
    // T1 -> T and T2 -> -T-1; w(-T-1) = w(T+1) since w(-1)^2 = w(1) = 1
    // forces w(-1) = 1.
    FieldPolynomial t(kUnivariate);
    t.add_term(Monomial({1}), Rational(1));
    FieldPolynomial t_plus_1 = t;
    t_plus_1.add_term(Monomial::unit(1), Rational(1));

    LineTropImage out;
    out.u1 = eval_seminorm(w, t);
    out.u2 = eval_seminorm(w, t_plus_1);
    out.nontrivial = !(out.u1 == TropValue::one() && out.u2 == TropValue::one());
    std::vector<TropValue> terms{out.u1, out.u2, TropValue::one()};
    out.on_line = leq_T(TropValue::zero(), terms);
    return out;
}

std::optional<bool> irreducibility_lint(const FieldPolynomial& f) {
    require_univariate(f, "irreducibility lint");
    long deg = poly_degree(f);
    if (deg < 1) return false;  // units and zero are not irreducible
    if (deg == 1) return true;

    // Clear denominators to an integer polynomial, then try rational roots
    // p/q with p | constant term and q | leading term.
    std::vector<Rational> c = to_dense(f);
    mpz_class lcm(1);
    for (const auto& x : c) {
        mpz_class den = x.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<mpz_class> z;
    z.reserve(c.size());
    for (const auto& x : c) z.push_back(x.numerator() * (lcm / x.denominator()));

    // Strip powers of T: a zero constant term means T divides f.
    if (z.front() == 0) return deg == 1;

    constexpr long kCoeffCap = 1000000;
    mpz_class a0 = abs(z.front()), an = abs(z.back());
    if (a0 > kCoeffCap || an > kCoeffCap) return std::nullopt;

    for (const mpz_class& p : positive_divisors(a0)) {
        for (const mpz_class& q : positive_divisors(an)) {
            for (int sign : {1, -1}) {
                Rational root(mpq_class(sign * p, q));
                if (eval_at(f, root).is_zero()) return false;
            }
        }
    }
    if (deg <= 3) return true;  // no root and degree <= 3 means irreducible
    return std::nullopt;
}

std::vector<SeminormDescriptor> default_catalog(const Rational& r) {
    FieldPolynomial t(kUnivariate);
    t.add_term(Monomial({1}), Rational(1));
    FieldPolynomial one(kUnivariate);
    one.add_term(Monomial::unit(1), Rational(1));

    FieldPolynomial t_plus_1 = t + one;
    FieldPolynomial t_minus_2 = t - (one + one);
    FieldPolynomial t2_plus_1 = t * t + one;
    FieldPolynomial t2_t_1 = t * t + t + one;

    std::vector<SeminormDescriptor> out;
    out.push_back(SeminormDescriptor::trivial_norm());
    for (const auto& f : {t, t_plus_1, t_minus_2, t2_plus_1, t2_t_1}) {
        out.push_back(SeminormDescriptor::f_adic(f, r));
        out.push_back(SeminormDescriptor::f_adic_zero(f));
    }
    out.push_back(SeminormDescriptor::infinity_adic(r));
    return out;
}

}  // namespace trop
