#include "trop/tropicalization.hpp"

#include <algorithm>
#include <stdexcept>

namespace trop {

namespace {

// Largest term value of p at x; the empty sum evaluates to 0.
TropValue max_value_at(const TropFormalSum& p, const TropPoint& x) {
    TropValue top = TropValue::zero();
    for (const auto& t : p.terms()) top = max(top, eval_term(t, x));
    return top;
}

// One relation, checked pointwise under the hyperfield order.
bool relation_holds_at(const TropRelation& r, const TropPoint& x) {
    if (r.lhs.size() > 1)
        throw std::invalid_argument(
            "membership: unsupported relation shape (left side must be a monomial): " +
            r.to_string());
    TropValue lhs_val =
        r.lhs.empty() ? TropValue::zero() : eval_term(r.lhs.term(0), x);
    std::vector<TropValue> rhs_vals = eval_trop(r.rhs, x);
    if (!leq_T(lhs_val, rhs_vals)) return false;
    if (r.kind == RelationKind::Eqv) {
        if (r.rhs.size() > 1)
            throw std::invalid_argument(
                "membership: unsupported congruence shape (both sides must be "
                "monomials): " +
                r.to_string());
        TropValue rhs_val =
            r.rhs.empty() ? TropValue::zero() : eval_term(r.rhs.term(0), x);
        std::vector<TropValue> lhs_vals;
        if (!r.lhs.empty()) lhs_vals.push_back(lhs_val);
        if (!leq_T(rhs_val, lhs_vals)) return false;
    }
    return true;
}

}  // namespace

bool bend_locus_member(const TropFormalSum& p, const TropPoint& x) {
    std::vector<TropValue> values = eval_trop(p, x);
    return leq_T(TropValue::zero(), values);
}

bool trop_point_member(const BlueprintPresentation& bt, const TropPoint& x) {
    if (!bt.is_tropical())
        throw std::invalid_argument("membership: presentation must be tropical");
    if (x.num_vars() != bt.signature().num_vars)
        throw std::invalid_argument("membership: point has " +
                                    std::to_string(x.num_vars()) +
                                    " coordinates, presentation expects " +
                                    std::to_string(bt.signature().num_vars));
    for (const auto& r : bt.trop_relations())
        if (!relation_holds_at(r, x)) return false;
    return true;
}

std::vector<TropPoint> grid_points(std::span<const GridAxis> axes) {
    if (axes.empty()) throw std::invalid_argument("grid: no axes");
    std::vector<std::vector<TropValue>> axis_values;
    for (const auto& a : axes) {
        if (a.lo.sign() < 0)
            throw std::invalid_argument("grid: negative lower bound");
        if (a.hi < a.lo) throw std::invalid_argument("grid: hi < lo");
        if (a.step.sign() <= 0) throw std::invalid_argument("grid: step must be positive");
        std::vector<TropValue> vals;
        for (Rational r = a.lo; r <= a.hi; r += a.step) vals.push_back(TropValue(r));
        axis_values.push_back(std::move(vals));
    }
    std::vector<TropPoint> out;
    std::vector<std::size_t> idx(axes.size(), 0);
    for (;;) {
        std::vector<TropValue> coords;
        coords.reserve(axes.size());
        for (std::size_t i = 0; i < axes.size(); ++i) coords.push_back(axis_values[i][idx[i]]);
        out.emplace_back(std::move(coords));
        // Odometer increment, last axis fastest, so output is lexicographic.
        std::size_t i = axes.size();
        while (i > 0) {
            --i;
            if (++idx[i] < axis_values[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::vector<TropPoint> sample_grid(const BlueprintPresentation& bt,
                                   std::span<const GridAxis> axes) {
    if (static_cast<int>(axes.size()) != bt.signature().num_vars)
        throw std::invalid_argument("grid: axis count must match the variable count");
    std::vector<TropPoint> out;
    for (auto& x : grid_points(axes))
        if (trop_point_member(bt, x)) out.push_back(std::move(x));
    return out;
}

std::vector<BendRelation> bend_relations(const std::vector<FieldPolynomial>& gens,
                                         const Valuation& v) {
    std::vector<BendRelation> out;
    for (const auto& p : gens) {
        TropFormalSum full = tropicalize_poly(p, v);
        for (std::size_t i = 0; i < full.size(); ++i) {
            BendRelation r{full, full.without_index(i), i};
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
        }
    }
    return out;
}

AgreementReport bend_vs_trop_points(const std::vector<FieldPolynomial>& gens,
                                    const MonoidSignature& sig, const Valuation& v,
                                    std::span<const GridAxis> axes) {
    BlueprintPresentation bt = base_change_to_T(monomial_blueprint(gens, sig, v));
    std::vector<TropFormalSum> trops;
    for (const auto& p : gens) trops.push_back(tropicalize_poly(p, v));
    std::vector<BendRelation> bends = bend_relations(gens, v);

    AgreementReport report;
    report.relative_to_generators = gens.size() > 1;
    for (const auto& x : grid_points(axes)) {
        ++report.points_checked;
        bool a = trop_point_member(bt, x);
        bool b = true;
        for (const auto& t : trops) b = b && bend_locus_member(t, x);
        bool c = true;
        for (const auto& br : bends)
            c = c && (max_value_at(br.full, x) == max_value_at(br.reduced, x));
        if (a) ++report.members;
        if (a != b || b != c)
            report.disagreements.push_back({x, a, b, c});
    }
    return report;
}

}  // namespace trop
