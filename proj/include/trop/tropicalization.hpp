#pragma once

#include "trop/blueprint.hpp"
#include "trop/hyperfield.hpp"
#include "trop/point.hpp"

#include <span>
#include <string>
#include <vector>

namespace trop {

// Bend test for a single tropical polynomial p at x: x lies in the bend
// locus when 0 <= sum of the term values, i.e. the maximum term value is
// attained at least twice, or all term values vanish.
bool bend_locus_member(const TropFormalSum& p, const TropPoint& x);

// Membership of x in the tropical presentation: every relation must hold at
// x under the hyperfield order.  Relations must have a monomial (at most one
// term) left side; anything else throws std::invalid_argument.
bool trop_point_member(const BlueprintPresentation& bt, const TropPoint& x);

// One axis of a rectangular sampling grid: lo, lo+step, ..., up to hi.
struct GridAxis {
    Rational lo;
    Rational hi;
    Rational step;
};

// All grid points (exact coordinates), ordered lexicographically.  Axis
// bounds must be nonnegative with lo <= hi and step > 0.
std::vector<TropPoint> grid_points(std::span<const GridAxis> axes);

// The grid points that pass trop_point_member, in the same order.
std::vector<TropPoint> sample_grid(const BlueprintPresentation& bt,
                                   std::span<const GridAxis> axes);

// A bend relation of one generator: the full tropicalized sum, and the same
// sum with one term dropped.  The two sides are congruent in the
// idempotent+positive quotient; the entailment module derives both
// inequalities.
struct BendRelation {
    TropFormalSum full;
    TropFormalSum reduced;
    std::size_t dropped_term_index = 0;

    bool operator==(const BendRelation& o) const = default;

    std::string to_string() const {
        return full.to_string() + " ~ " + reduced.to_string();
    }
};

// All bend relations of the generators under the valuation: one per term of
// each nonzero tropicalized generator, duplicates removed (first occurrence
// kept, order of first appearance).
std::vector<BendRelation> bend_relations(const std::vector<FieldPolynomial>& gens,
                                         const Valuation& v);

// Point-by-point comparison of three membership routes over a grid:
//   (a) presentation membership through monomial_blueprint + base change,
//   (b) the conjunction of per-generator bend-locus tests,
//   (c) agreement of max(full) and max(reduced) at the point for every bend
//       relation (the congruence seen through evaluation).
struct AgreementReport {
    std::size_t points_checked = 0;
    std::size_t members = 0;
    // Set when >1 generator: membership is relative to the given generators,
    // which need not form a tropical basis of the ideal.
    bool relative_to_generators = false;

    struct Disagreement {
        TropPoint point;
        bool presentation_member;
        bool bend_member;
        bool congruence_holds;
    };
    std::vector<Disagreement> disagreements;

    bool ok() const { return disagreements.empty(); }
};

AgreementReport bend_vs_trop_points(const std::vector<FieldPolynomial>& gens,
                                    const MonoidSignature& sig, const Valuation& v,
                                    std::span<const GridAxis> axes);

}  // namespace trop
