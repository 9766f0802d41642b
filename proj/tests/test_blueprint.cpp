#include "trop/blueprint.hpp"
#include "trop/parse.hpp"
#include "trop/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

using namespace trop;

namespace {

const MonoidSignature kSig2{2, false};

FieldFormalSum fsum(std::string_view text) {
    return to_formal_sum(parse_polynomial(text, kSig2));
}

TropFormalSum tsum(std::string_view text) { return parse_trop_sum(text, kSig2); }

TropFormalSum random_tsum(SplitMix64& rng, int max_terms) {
    TropFormalSum s;
    for (long k = rng.range(0, max_terms); k > 0; --k) {
        std::vector<int> exps{static_cast<int>(rng.range(0, 2)),
                              static_cast<int>(rng.range(0, 2))};
        s.add_term(TropTerm{TropValue(rng.nonneg_rational(4, 2)),
                            Monomial(std::move(exps))});
    }
    return s;
}

}  // namespace

TEST_CASE("relation normalization and ordering") {
    TropRelation e1 = TropRelation::eqv(tsum("T1 + 1"), tsum("T2"));
    TropRelation e2 = TropRelation::eqv(tsum("T2"), tsum("T1 + 1"));
    CHECK(e1 == e2);  // two-sided relations store a canonical orientation
    TropRelation l1 = TropRelation::leq(tsum("T2"), tsum("T1 + 1"));
    TropRelation l2 = TropRelation::leq(tsum("T1 + 1"), tsum("T2"));
    CHECK_FALSE(l1 == l2);  // one-sided relations keep their orientation
    CHECK(l1.to_string() == "T2 <= T1 + 1");
    // The canonical left side is the smaller sum; T1 + 1 precedes T2 because
    // sums compare term by term and T1 precedes T2 in graded-lex display order.
    CHECK(e1.to_string() == "T1 + 1 ~ T2");
}

TEST_CASE("monomial presentation of a line") {
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 1", kSig2)};
    BlueprintPresentation b = monomial_blueprint(gens, kSig2, Valuation::trivial());

    CHECK_FALSE(b.is_tropical());
    CHECK(b.valuation() == Valuation::trivial());
    std::vector<FieldRelation> expected{
        FieldRelation::leq(FieldFormalSum::zero(), fsum("T1 + T2 + 1")),
        FieldRelation::leq(fsum("-T1"), fsum("T2 + 1")),
        FieldRelation::leq(fsum("-T2"), fsum("T1 + 1")),
        FieldRelation::leq(fsum("-1"), fsum("T1 + T2")),
    };
    std::sort(expected.begin(), expected.end());
    CHECK(b.field_relations() == expected);
    CHECK_THROWS_AS(b.trop_relations(), std::logic_error);
}

TEST_CASE("base change sends every coefficient to its magnitude") {
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 1", kSig2)};
    BlueprintPresentation b = monomial_blueprint(gens, kSig2, Valuation::trivial());
    BlueprintPresentation t = base_change_to_T(b);

    CHECK(t.is_tropical());
    std::vector<TropRelation> expected{
        TropRelation::leq(TropFormalSum::zero(), tsum("T1 + T2 + 1")),
        TropRelation::leq(tsum("T1"), tsum("T2 + 1")),
        TropRelation::leq(tsum("T2"), tsum("T1 + 1")),
        TropRelation::leq(tsum("1"), tsum("T1 + T2")),
    };
    std::sort(expected.begin(), expected.end());
    CHECK(t.trop_relations() == expected);
    CHECK_THROWS_AS(t.valuation(), std::logic_error);
    CHECK_THROWS_AS(t.field_relations(), std::logic_error);
    CHECK_THROWS_AS(base_change_to_T(t), std::invalid_argument);
}

TEST_CASE("base change with a p-adic valuation scales the coefficients") {
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 3", kSig2)};
    BlueprintPresentation t = base_change_to_T(
        monomial_blueprint(gens, kSig2, Valuation::padic(3)));
    std::vector<TropRelation> expected{
        TropRelation::leq(TropFormalSum::zero(), tsum("T1 + T2 + 1/3")),
        TropRelation::leq(tsum("T1"), tsum("T2 + 1/3")),
        TropRelation::leq(tsum("T2"), tsum("T1 + 1/3")),
        TropRelation::leq(tsum("1/3"), tsum("T1 + T2")),
    };
    std::sort(expected.begin(), expected.end());
    CHECK(t.trop_relations() == expected);
}

TEST_CASE("opposite coefficients collapse to one magnitude after base change") {
    // 2*T1 - 2*T2: the field presentation distinguishes -2 and 2, the
    // tropical one does not.
    std::vector<FieldPolynomial> gens{parse_polynomial("2*T1 - 2*T2", kSig2)};
    BlueprintPresentation b = monomial_blueprint(gens, kSig2, Valuation::trivial());
    std::vector<FieldRelation> expected_field{
        FieldRelation::leq(FieldFormalSum::zero(), fsum("2*T1 - 2*T2")),
        FieldRelation::leq(fsum("-2*T1"), fsum("-2*T2")),
        FieldRelation::leq(fsum("2*T2"), fsum("2*T1")),
    };
    std::sort(expected_field.begin(), expected_field.end());
    CHECK(b.field_relations() == expected_field);

    BlueprintPresentation t = base_change_to_T(b);
    std::vector<TropRelation> expected_trop{
        TropRelation::leq(TropFormalSum::zero(), tsum("T1 + T2")),
        TropRelation::leq(tsum("T1"), tsum("T2")),
        TropRelation::leq(tsum("T2"), tsum("T1")),
    };
    std::sort(expected_trop.begin(), expected_trop.end());
    CHECK(t.trop_relations() == expected_trop);
}

TEST_CASE("generator lists deduplicate and skip zero") {
    std::vector<FieldPolynomial> gens{
        parse_polynomial("T1 + 1", kSig2),
        parse_polynomial("T1 + 1", kSig2),
        FieldPolynomial::zero(kSig2),
    };
    BlueprintPresentation b = monomial_blueprint(gens, kSig2, Valuation::trivial());
    CHECK(b.field_relations().size() == 3);  // full + two single-term relations
}

TEST_CASE("quotient flags and the core") {
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 1", kSig2)};
    BlueprintPresentation t = base_change_to_T(
        monomial_blueprint(gens, kSig2, Valuation::trivial()));
    CHECK_FALSE(t.flags().idempotent);
    CHECK_FALSE(t.flags().totally_positive);

    BlueprintPresentation q = apply_pos(apply_idem(t));
    CHECK(q.flags().idempotent);
    CHECK(q.flags().totally_positive);
    CHECK(q.trop_relations() == t.trop_relations());  // flags, not rewrites

    BlueprintPresentation c = core(q);
    CHECK(c.flags().idempotent);          // congruence data survives
    CHECK_FALSE(c.flags().totally_positive);  // order data is forgotten
    for (const auto& r : c.trop_relations()) CHECK(r.kind == RelationKind::Eqv);
    CHECK(c.trop_relations().empty());  // the line presentation is all order

    std::vector<TropRelation> mixed{
        TropRelation::leq(tsum("T1"), tsum("T2")),
        TropRelation::eqv(tsum("T1"), tsum("T2 + 1")),
    };
    BlueprintPresentation m = BlueprintPresentation::tropical(kSig2, mixed);
    BlueprintPresentation mc = core(m);
    REQUIRE(mc.trop_relations().size() == 1);
    CHECK(mc.trop_relations()[0] == TropRelation::eqv(tsum("T1"), tsum("T2 + 1")));
}

TEST_CASE("presentations validate their inputs") {
    CHECK_THROWS_AS(BlueprintPresentation::tropical(MonoidSignature{0, false}, {}),
                    std::invalid_argument);
    // A relation whose sums use the wrong number of variables is rejected.
    TropFormalSum wrong;
    wrong.add_term(TropTerm{TropValue::one(), Monomial(std::vector<int>{1})});
    CHECK_THROWS_AS(BlueprintPresentation::tropical(
                        kSig2, {TropRelation::leq(wrong, tsum("T1"))}),
                    std::invalid_argument);
    // Negative exponents need a Laurent signature.
    TropFormalSum laurent;
    laurent.add_term(TropTerm{TropValue::one(), Monomial(std::vector<int>{-1, 0})});
    CHECK_THROWS_AS(BlueprintPresentation::tropical(
                        kSig2, {TropRelation::leq(laurent, tsum("T1"))}),
                    std::invalid_argument);
    CHECK_NOTHROW(BlueprintPresentation::tropical(
        MonoidSignature{2, true}, {TropRelation::leq(laurent, tsum("T1"))}));
}

TEST_CASE("idempotent normal form keeps the largest coefficient per monomial") {
    CHECK(idem_normal_form(tsum("2*T1 + 3*T1 + T2")) == tsum("3*T1 + T2"));
    CHECK(idem_normal_form(tsum("T1 + T1")) == tsum("T1"));
    CHECK(idem_normal_form(tsum("0")) == TropFormalSum::zero());
    CHECK(idem_normal_form(tsum("5")) == tsum("5"));

    SplitMix64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        TropFormalSum s = random_tsum(rng, 6), t = random_tsum(rng, 6);
        TropFormalSum ns = idem_normal_form(s);
        CHECK(idem_normal_form(ns) == ns);  // idempotent
        CHECK(idem_normal_form(s.plus(t)) ==
              idem_normal_form(ns.plus(idem_normal_form(t))));  // monotone
        // Every monomial appears at most once afterwards.
        for (std::size_t i = 1; i < ns.size(); ++i)
            CHECK(ns.term(i - 1).mono != ns.term(i).mono);
    }
}

TEST_CASE("order criterion of the idempotent positive quotient") {
    CHECK(idem_leq(tsum("T1"), tsum("T1 + T2")));
    CHECK(idem_leq(tsum("2*T1"), tsum("3*T1")));
    CHECK_FALSE(idem_leq(tsum("3*T1"), tsum("2*T1")));
    CHECK(idem_leq(tsum("0"), tsum("T1")));
    CHECK(idem_leq(TropFormalSum::zero(), TropFormalSum::zero()));
    CHECK_FALSE(idem_leq(tsum("T1"), tsum("T2")));
    CHECK(idem_leq(tsum("T1 + 1"), tsum("T1 + T2 + 1")));

    SplitMix64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        TropFormalSum s = random_tsum(rng, 5), t = random_tsum(rng, 5);
        CHECK(idem_leq(s, s.plus(t)));                    // summands sit below sums
        CHECK(idem_leq(s, idem_normal_form(s)));          // nf is order-equivalent
        CHECK(idem_leq(idem_normal_form(s), s));
        if (idem_leq(s, t) && idem_leq(t, s))
            CHECK(idem_normal_form(s) == idem_normal_form(t));
    }
}

TEST_CASE("human-readable listing mentions domain, flags, and relations") {
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 1", kSig2)};
    BlueprintPresentation t = apply_idem(base_change_to_T(
        monomial_blueprint(gens, kSig2, Valuation::trivial())));
    std::string text = t.to_string();
    CHECK(text.find("T1 <= T2 + 1") != std::string::npos);
    CHECK(text.find("idempotent") != std::string::npos);
}
