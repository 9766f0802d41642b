#include "trop/parse.hpp"
#include "trop/random.hpp"
#include "trop/tropicalization.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace trop;

namespace {

const MonoidSignature kSig2{2, false};

TropPoint pt(const Rational& a, const Rational& b) {
    return TropPoint(std::vector<TropValue>{TropValue(a), TropValue(b)});
}

BlueprintPresentation line_presentation(const Valuation& v, const char* text) {
    std::vector<FieldPolynomial> gens{parse_polynomial(text, kSig2)};
    return base_change_to_T(monomial_blueprint(gens, kSig2, v));
}

// Test-side membership oracle for a single generator, written directly from
// the bend rule: the maximum term value occurs at least twice (or all
// vanish).  No library evaluation paths are reused beyond term arithmetic.
bool oracle_member(const FieldPolynomial& p, const Valuation& v, const TropPoint& x) {
    std::vector<Rational> values;
    for (const auto& [m, c] : p.terms()) {
        Rational val = apply_valuation(v, c).value();
        for (int i = 0; i < m.num_vars(); ++i)
            val = val * x.coord(i).value().pow(m.exponent(i));
        values.push_back(val);
    }
    Rational top(0);
    for (const auto& val : values)
        if (val > top) top = val;
    if (top.is_zero()) return true;
    int hits = 0;
    for (const auto& val : values)
        if (val == top) ++hits;
    return hits >= 2;
}

}  // namespace

TEST_CASE("bend membership for the line") {
    TropFormalSum line = parse_trop_sum("T1 + T2 + 1", kSig2);
    CHECK(bend_locus_member(line, pt(Rational(2), Rational(2))));
    CHECK(bend_locus_member(line, pt(Rational(1), Rational(1))));
    CHECK(bend_locus_member(line, pt(Rational(0), Rational(1))));
    CHECK(bend_locus_member(line, pt(Rational(1), Rational(0))));
    CHECK(bend_locus_member(line, pt(Rational(1, 2), Rational(1))));
    CHECK_FALSE(bend_locus_member(line, pt(Rational(2), Rational(0))));
    CHECK_FALSE(bend_locus_member(line, pt(Rational(0), Rational(0))));
    CHECK_FALSE(bend_locus_member(line, pt(Rational(3), Rational(1))));
    CHECK_FALSE(bend_locus_member(line, pt(Rational(1, 2), Rational(1, 4))));

    // A sum that vanishes identically at the origin is bent there.
    TropFormalSum no_const = parse_trop_sum("T1 + T2", kSig2);
    CHECK(bend_locus_member(no_const, pt(Rational(0), Rational(0))));
    CHECK(bend_locus_member(TropFormalSum::zero(), pt(Rational(3), Rational(7))));
}

TEST_CASE("presentation membership equals the bend rule for one generator") {
    BlueprintPresentation bt = line_presentation(Valuation::trivial(), "T1 + T2 + 1");
    CHECK(trop_point_member(bt, pt(Rational(2), Rational(2))));
    CHECK_FALSE(trop_point_member(bt, pt(Rational(2), Rational(0))));
    CHECK_FALSE(trop_point_member(bt, pt(Rational(0), Rational(0))));
    CHECK(trop_point_member(bt, pt(Rational(0), Rational(1))));
    CHECK_THROWS_AS(trop_point_member(bt, TropPoint(std::vector<TropValue>{
                                              TropValue::one()})),
                    std::invalid_argument);

    // Only tropical presentations can be tested against tropical points.
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 1", kSig2)};
    BlueprintPresentation field = monomial_blueprint(gens, kSig2, Valuation::trivial());
    CHECK_THROWS_AS(trop_point_member(field, pt(Rational(1), Rational(1))),
                    std::invalid_argument);
}

TEST_CASE("relations with a non-monomial left side are rejected") {
    std::vector<TropRelation> rels{TropRelation::leq(
        parse_trop_sum("T1 + T2", kSig2), parse_trop_sum("1", kSig2))};
    BlueprintPresentation bad = BlueprintPresentation::tropical(kSig2, rels);
    CHECK_THROWS_AS(trop_point_member(bad, pt(Rational(1), Rational(1))),
                    std::invalid_argument);
}

TEST_CASE("two-sided relations require both directions at a point") {
    std::vector<TropRelation> rels{TropRelation::eqv(
        parse_trop_sum("T1", kSig2), parse_trop_sum("T2", kSig2))};
    BlueprintPresentation diag = BlueprintPresentation::tropical(kSig2, rels);
    CHECK(trop_point_member(diag, pt(Rational(3), Rational(3))));
    CHECK_FALSE(trop_point_member(diag, pt(Rational(3), Rational(2))));
    CHECK_FALSE(trop_point_member(diag, pt(Rational(2), Rational(3))));
}

TEST_CASE("grids enumerate exact rational points lexicographically") {
    std::vector<GridAxis> axes{GridAxis{Rational(0), Rational(1), Rational(1, 2)},
                               GridAxis{Rational(0), Rational(1), Rational(1)}};
    std::vector<TropPoint> pts = grid_points(axes);
    REQUIRE(pts.size() == 6);
    CHECK(pts.front() == pt(Rational(0), Rational(0)));
    CHECK(pts[1] == pt(Rational(0), Rational(1)));
    CHECK(pts[2] == pt(Rational(1, 2), Rational(0)));
    CHECK(pts.back() == pt(Rational(1), Rational(1)));
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1] < pts[i]);

    // A step that overshoots hi stops below it; a degenerate axis is a point.
    std::vector<GridAxis> odd{GridAxis{Rational(0), Rational(1), Rational(2, 3)}};
    CHECK(grid_points(odd).size() == 2);  // 0 and 2/3
    std::vector<GridAxis> single{GridAxis{Rational(5), Rational(5), Rational(1)}};
    CHECK(grid_points(single).size() == 1);

    CHECK_THROWS_AS(grid_points(std::vector<GridAxis>{
                        GridAxis{Rational(-1), Rational(1), Rational(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(grid_points(std::vector<GridAxis>{
                        GridAxis{Rational(2), Rational(1), Rational(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(grid_points(std::vector<GridAxis>{
                        GridAxis{Rational(0), Rational(1), Rational(0)}}),
                    std::invalid_argument);
}

TEST_CASE("line members on the quarter-step box") {
    BlueprintPresentation bt = line_presentation(Valuation::trivial(), "T1 + T2 + 1");
    std::vector<GridAxis> axes(2, GridAxis{Rational(0), Rational(4), Rational(1, 4)});
    CHECK(grid_points(axes).size() == 289);  // 17 x 17

    std::vector<TropPoint> members = sample_grid(bt, axes);
    CHECK(members.size() == 21);

    // Cross-check every grid point against the independent oracle.
    FieldPolynomial gen = parse_polynomial("T1 + T2 + 1", kSig2);
    for (const auto& x : grid_points(axes))
        CHECK(trop_point_member(bt, x) == oracle_member(gen, Valuation::trivial(), x));

    // The member set splits into the three rays plus the vertex:
    //   x = y >= 1 (diagonal), y = 1 and x <= 1, x = 1 and y <= 1.
    for (const auto& x : members) {
        Rational a = x.coord(0).value(), b = x.coord(1).value();
        bool diagonal = a == b && a >= Rational(1);
        bool horizontal = b == Rational(1) && a <= Rational(1);
        bool vertical = a == Rational(1) && b <= Rational(1);
        CHECK((diagonal || horizontal || vertical));
    }
}

TEST_CASE("p-adic line members on the unit box") {
    BlueprintPresentation bt = line_presentation(Valuation::padic(3), "T1 + T2 + 3");
    std::vector<GridAxis> axes(2, GridAxis{Rational(0), Rational(1), Rational(1, 12)});
    CHECK(grid_points(axes).size() == 169);  // 13 x 13
    CHECK(sample_grid(bt, axes).size() == 17);

    FieldPolynomial gen = parse_polynomial("T1 + T2 + 3", kSig2);
    for (const auto& x : grid_points(axes))
        CHECK(trop_point_member(bt, x) == oracle_member(gen, Valuation::padic(3), x));
}

TEST_CASE("bend relations drop one term at a time") {
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 1", kSig2)};
    std::vector<BendRelation> rels = bend_relations(gens, Valuation::trivial());
    REQUIRE(rels.size() == 3);
    TropFormalSum full = parse_trop_sum("T1 + T2 + 1", kSig2);
    for (const auto& r : rels) {
        CHECK(r.full == full);
        CHECK(r.reduced.size() == 2);
        // reduced + dropped term == full, exactly.
        CHECK(r.reduced.plus(TropFormalSum::single(full.term(r.dropped_term_index))) ==
              full);
    }
    CHECK(rels[0].reduced == parse_trop_sum("T2 + 1", kSig2));
    CHECK(rels[1].reduced == parse_trop_sum("T1 + 1", kSig2));
    CHECK(rels[2].reduced == parse_trop_sum("T1 + T2", kSig2));

    // Signs vanish under base change: T1 - T2 bends like T1 + T2.
    std::vector<FieldPolynomial> twin{parse_polynomial("T1 - T2", kSig2)};
    std::vector<BendRelation> tw = bend_relations(twin, Valuation::trivial());
    REQUIRE(tw.size() == 2);
    CHECK(tw[0].reduced == parse_trop_sum("T2", kSig2));
    CHECK(tw[1].reduced == parse_trop_sum("T1", kSig2));

    // Duplicate generators contribute their relations once.
    std::vector<FieldPolynomial> dup{parse_polynomial("T1 + 1", kSig2),
                                     parse_polynomial("T1 + 1", kSig2)};
    CHECK(bend_relations(dup, Valuation::trivial()).size() == 2);

    CHECK(bend_relations({FieldPolynomial::zero(kSig2)}, Valuation::trivial()).empty());
}

TEST_CASE("three membership routes agree pointwise on the line") {
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 1", kSig2)};
    std::vector<GridAxis> axes(2, GridAxis{Rational(0), Rational(4), Rational(1, 4)});
    AgreementReport rep =
        bend_vs_trop_points(gens, kSig2, Valuation::trivial(), axes);
    CHECK(rep.ok());
    CHECK(rep.points_checked == 289);
    CHECK(rep.members == 21);
    CHECK_FALSE(rep.relative_to_generators);
}

TEST_CASE("three membership routes agree for a p-adic valuation") {
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 3", kSig2)};
    std::vector<GridAxis> axes(2, GridAxis{Rational(0), Rational(1), Rational(1, 12)});
    AgreementReport rep = bend_vs_trop_points(gens, kSig2, Valuation::padic(3), axes);
    CHECK(rep.ok());
    CHECK(rep.points_checked == 169);
    CHECK(rep.members == 17);
}

TEST_CASE("multiple generators intersect and set the relative flag") {
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 1", kSig2),
                                      parse_polynomial("T1 - T2", kSig2)};
    std::vector<GridAxis> axes(2, GridAxis{Rational(0), Rational(2), Rational(1, 2)});
    AgreementReport rep =
        bend_vs_trop_points(gens, kSig2, Valuation::trivial(), axes);
    CHECK(rep.ok());
    CHECK(rep.relative_to_generators);
    // Diagonal points with both coordinates >= 1 survive both conditions.
    BlueprintPresentation bt = base_change_to_T(
        monomial_blueprint(gens, kSig2, Valuation::trivial()));
    std::vector<TropPoint> members = sample_grid(bt, axes);
    CHECK(rep.members == members.size());
    for (const auto& x : members) {
        CHECK(x.coord(0) == x.coord(1));
        CHECK(x.coord(0).value() >= Rational(1));
    }
}

TEST_CASE("random polynomials: presentation membership matches the bend oracle") {
    SplitMix64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        FieldPolynomial p(kSig2);
        for (long k = rng.range(1, 4); k > 0; --k) {
            Rational c = rng.rational(9, 1);
            if (c.is_zero()) c = Rational(1);
            p.add_term(Monomial(std::vector<int>{static_cast<int>(rng.range(0, 2)),
                                                 static_cast<int>(rng.range(0, 2))}),
                       c);
        }
        if (p.is_zero()) continue;
        Valuation v = rng.coin() ? Valuation::trivial() : Valuation::padic(2);
        BlueprintPresentation bt =
            base_change_to_T(monomial_blueprint({p}, kSig2, v));
        for (int s = 0; s < 25; ++s) {
            TropPoint x = pt(rng.nonneg_rational(4, 2), rng.nonneg_rational(4, 2));
            CHECK(trop_point_member(bt, x) == oracle_member(p, v, x));
        }
    }
}
