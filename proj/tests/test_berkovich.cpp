#include "trop/berkovich.hpp"
#include "trop/parse.hpp"
#include "trop/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using namespace trop;

namespace {

const MonoidSignature kUni{1, false};

FieldPolynomial upoly(std::string_view text) { return parse_polynomial(text, kUni); }

FieldPolynomial random_upoly(SplitMix64& rng, int max_deg) {
    FieldPolynomial p(kUni);
    for (int e = 0; e <= max_deg; ++e)
        p.add_term(Monomial({e}), Rational(rng.range(-4, 4)));
    return p;
}

}  // namespace

TEST_CASE("univariate division with remainder") {
    auto [q1, r1] = poly_divmod(upoly("T1^3 - 1"), upoly("T1 - 1"));
    CHECK(q1 == upoly("T1^2 + T1 + 1"));
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divmod(upoly("T1^2 + 1"), upoly("T1 + 1"));
    CHECK(q2 == upoly("T1 - 1"));
    CHECK(r2 == upoly("2"));

    auto [q3, r3] = poly_divmod(upoly("1"), upoly("T1"));
    CHECK(q3.is_zero());
    CHECK(r3 == upoly("1"));

    // Non-monic divisors divide exactly over the rationals.
    auto [q4, r4] = poly_divmod(upoly("T1^2"), upoly("2*T1"));
    CHECK(q4 == upoly("1/2*T1"));
    CHECK(r4.is_zero());

    CHECK_THROWS_AS(poly_divmod(upoly("T1"), FieldPolynomial::zero(kUni)),
                    std::domain_error);

    SplitMix64 rng(59);
    for (int trial = 0; trial < 150; ++trial) {
        FieldPolynomial num = random_upoly(rng, 5);
        FieldPolynomial den = random_upoly(rng, 2);
        if (den.is_zero()) continue;
        auto [q, r] = poly_divmod(num, den);
        CHECK(q * den + r == num);
        CHECK(poly_degree(r) < poly_degree(den));
    }
}

TEST_CASE("multiplicity counts exact divisions") {
    FieldPolynomial g = upoly("T1 + 1") * upoly("T1 + 1") * upoly("T1");
    CHECK(poly_multiplicity(g, upoly("T1 + 1")) == 2);
    CHECK(poly_multiplicity(g, upoly("T1")) == 1);
    CHECK(poly_multiplicity(g, upoly("T1 - 2")) == 0);
    CHECK(poly_multiplicity(upoly("5"), upoly("T1")) == 0);
    CHECK_THROWS_AS(poly_multiplicity(FieldPolynomial::zero(kUni), upoly("T1")),
                    std::invalid_argument);
    CHECK_THROWS_AS(poly_multiplicity(g, upoly("3")), std::invalid_argument);

    CHECK(poly_degree(FieldPolynomial::zero(kUni)) == -1);
    CHECK(poly_degree(upoly("7")) == 0);
    CHECK(poly_degree(upoly("T1^4 + T1")) == 4);
}

TEST_CASE("seminorm values by kind") {
    SeminormDescriptor triv = SeminormDescriptor::trivial_norm();
    CHECK(eval_seminorm(triv, upoly("3*T1^5 - 7")) == TropValue::one());
    CHECK(eval_seminorm(triv, FieldPolynomial::zero(kUni)) == TropValue::zero());

    SeminormDescriptor at0 = SeminormDescriptor::f_adic(upoly("T1"), Rational(1, 2));
    CHECK(eval_seminorm(at0, upoly("T1^2 + T1^3")) == TropValue(1, 4));
    CHECK(eval_seminorm(at0, upoly("T1 + 1")) == TropValue::one());
    CHECK(eval_seminorm(at0, upoly("5")) == TropValue::one());

    SeminormDescriptor at1 =
        SeminormDescriptor::f_adic(upoly("T1 + 1"), Rational(1, 3));
    FieldPolynomial cube = upoly("T1 + 1") * upoly("T1 + 1") * upoly("T1 + 1");
    CHECK(eval_seminorm(at1, cube) == TropValue(1, 27));

    SeminormDescriptor zero0 = SeminormDescriptor::f_adic_zero(upoly("T1"));
    CHECK(eval_seminorm(zero0, upoly("T1^2 + T1")) == TropValue::zero());
    CHECK(eval_seminorm(zero0, upoly("T1 + 1")) == TropValue::one());

    SeminormDescriptor inf = SeminormDescriptor::infinity_adic(Rational(1, 2));
    CHECK(eval_seminorm(inf, upoly("T1^3 + 1")) == TropValue(8, 1));
    CHECK(eval_seminorm(inf, upoly("4")) == TropValue::one());
    CHECK(eval_seminorm(inf, FieldPolynomial::zero(kUni)) == TropValue::zero());

    // Only univariate non-Laurent input makes sense.
    CHECK_THROWS_AS(
        eval_seminorm(triv, parse_polynomial("T1 + T2", MonoidSignature{2, false})),
        std::invalid_argument);
}

TEST_CASE("descriptor factories enforce their constraints") {
    CHECK_THROWS_AS(SeminormDescriptor::f_adic(upoly("T1"), Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SeminormDescriptor::f_adic(upoly("T1"), Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SeminormDescriptor::f_adic(upoly("T1"), Rational(5, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SeminormDescriptor::f_adic(upoly("2*T1"), Rational(1, 2)),
                    std::invalid_argument);  // not monic
    CHECK_THROWS_AS(SeminormDescriptor::f_adic(upoly("1"), Rational(1, 2)),
                    std::invalid_argument);  // constant
    CHECK_THROWS_AS(SeminormDescriptor::f_adic_zero(upoly("3")), std::invalid_argument);
    CHECK_THROWS_AS(SeminormDescriptor::infinity_adic(Rational(1)),
                    std::invalid_argument);

    SeminormDescriptor triv = SeminormDescriptor::trivial_norm();
    CHECK_THROWS_AS(triv.f(), std::logic_error);
    CHECK_THROWS_AS(SeminormDescriptor::f_adic_zero(upoly("T1")).radius(),
                    std::logic_error);

    CHECK(triv.to_string() == "trivial");
    CHECK(SeminormDescriptor::f_adic(upoly("T1 + 1"), Rational(1, 2)).to_string() ==
          "fadic(T1 + 1; 1/2)");
    CHECK(SeminormDescriptor::f_adic_zero(upoly("T1")).to_string() == "fadic0(T1)");
    CHECK(SeminormDescriptor::infinity_adic(Rational(1, 2)).to_string() ==
          "infinity(1/2)");
}

TEST_CASE("the catalog passes the seminorm audit on random pairs") {
    SplitMix64 rng(61);
    std::vector<std::pair<FieldPolynomial, FieldPolynomial>> pairs;
    for (int i = 0; i < 250; ++i)
        pairs.emplace_back(random_upoly(rng, 3), random_upoly(rng, 3));

    for (const auto& w : default_catalog(Rational(1, 2))) {
        SeminormAudit audit = check_is_seminorm(w, pairs);
        INFO(w.to_string());
        CHECK(audit.ok());
        CHECK(audit.pairs_checked == pairs.size());
    }
}

TEST_CASE("the audit catches a reducible center") {
    // T1^2 + T1 = T1 * (T1 + 1): multiplicativity fails on the factor pair.
    std::vector<std::pair<FieldPolynomial, FieldPolynomial>> pairs{
        {upoly("T1"), upoly("T1 + 1")}};
    FieldPolynomial reducible = upoly("T1^2 + T1");

    SeminormAudit a1 =
        check_is_seminorm(SeminormDescriptor::f_adic(reducible, Rational(1, 2)), pairs);
    CHECK_FALSE(a1.ok());
    SeminormAudit a2 =
        check_is_seminorm(SeminormDescriptor::f_adic_zero(reducible), pairs);
    CHECK_FALSE(a2.ok());
}

TEST_CASE("line images single out the seminorms that see T or T+1") {
    std::vector<SeminormDescriptor> catalog = default_catalog(Rational(1, 2));
    REQUIRE(catalog.size() == 12);

    std::set<std::string> nontrivial;
    for (const auto& w : catalog) {
        LineTropImage img = line_trop_image(w);
        CHECK(img.on_line);  // every catalog image lands on the tropical line
        if (img.nontrivial) nontrivial.insert(w.to_string());
    }
    std::set<std::string> expected{"fadic(T1; 1/2)", "fadic0(T1)",
                                   "fadic(T1 + 1; 1/2)", "fadic0(T1 + 1)",
                                   "infinity(1/2)"};
    CHECK(nontrivial == expected);
}

TEST_CASE("line image coordinates") {
    LineTropImage at0 =
        line_trop_image(SeminormDescriptor::f_adic(upoly("T1"), Rational(1, 2)));
    CHECK(at0.u1 == TropValue(1, 2));
    CHECK(at0.u2 == TropValue::one());

    LineTropImage z1 =
        line_trop_image(SeminormDescriptor::f_adic_zero(upoly("T1 + 1")));
    CHECK(z1.u1 == TropValue::one());
    CHECK(z1.u2 == TropValue::zero());

    LineTropImage inf =
        line_trop_image(SeminormDescriptor::infinity_adic(Rational(1, 4)));
    CHECK(inf.u1 == TropValue(4, 1));
    CHECK(inf.u2 == TropValue(4, 1));

    LineTropImage far =
        line_trop_image(SeminormDescriptor::f_adic(upoly("T1 - 2"), Rational(1, 2)));
    CHECK_FALSE(far.nontrivial);
}

TEST_CASE("irreducibility lint") {
    CHECK(irreducibility_lint(upoly("T1^2 + 1")) == true);
    CHECK(irreducibility_lint(upoly("T1^2 - 1")) == false);
    CHECK(irreducibility_lint(upoly("T1^2 + T1")) == false);
    CHECK(irreducibility_lint(upoly("T1^2 + T1 + 1")) == true);
    CHECK(irreducibility_lint(upoly("T1 + 5")) == true);
    CHECK(irreducibility_lint(upoly("2*T1 + 1")) == true);
    CHECK(irreducibility_lint(upoly("T1^3 - 2")) == true);
    CHECK(irreducibility_lint(upoly("T1^3 - 1")) == false);
    CHECK(irreducibility_lint(upoly("7")) == false);
    CHECK(irreducibility_lint(FieldPolynomial::zero(kUni)) == false);
    CHECK(irreducibility_lint(upoly("T1^4 - 1")) == false);  // root 1

    // Degree 4+ without a rational root is inconclusive, honestly.
    FieldPolynomial quartic = upoly("T1^2 + 1") * upoly("T1^2 + 1");
    CHECK(irreducibility_lint(quartic) == std::nullopt);
    // Oversized coefficients bail out rather than looping over divisors.
    CHECK(irreducibility_lint(upoly("T1^2 + 10000019")) == std::nullopt);
}

TEST_CASE("fractional coefficients clear correctly in the lint") {
    // 1/2 T^2 - 1/2 = (1/2)(T-1)(T+1): root 1 must be found after clearing.
    CHECK(irreducibility_lint(upoly("1/2*T1^2 - 1/2")) == false);
    // T^2 - 1/4 has the rational root 1/2.
    CHECK(irreducibility_lint(upoly("T1^2 - 1/4")) == false);
    // 2T^2 + 3T + 1 = (2T+1)(T+1): root -1/2 needs q | leading coefficient.
    CHECK(irreducibility_lint(upoly("2*T1^2 + 3*T1 + 1")) == false);
}
