#pragma once

#include "trop/polynomial.hpp"

#include <string>
#include <vector>

namespace trop {

enum class RelationKind { Leq, Eqv };

// One presentation relation between formal sums: lhs <= rhs, or lhs ~ rhs
// (a two-sided congruence).  Eqv relations are stored with the
// lexicographically smaller side on the left, so equality is syntactic.
template <typename Coeff>
struct Relation {
    FormalSum<Coeff> lhs;
    FormalSum<Coeff> rhs;
    RelationKind kind = RelationKind::Leq;

    static Relation leq(FormalSum<Coeff> l, FormalSum<Coeff> r) {
        return Relation{std::move(l), std::move(r), RelationKind::Leq};
    }
    static Relation eqv(FormalSum<Coeff> l, FormalSum<Coeff> r) {
        Relation rel{std::move(l), std::move(r), RelationKind::Eqv};
        rel.normalize();
        return rel;
    }

    void normalize() {
        if (kind == RelationKind::Eqv && rhs < lhs) std::swap(lhs, rhs);
    }

    bool operator==(const Relation& o) const = default;
    bool operator<(const Relation& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (lhs != o.lhs) return lhs < o.lhs;
        return rhs < o.rhs;
    }

    std::string to_string() const {
        return lhs.to_string() + (kind == RelationKind::Leq ? " <= " : " ~ ") +
               rhs.to_string();
    }
};

using FieldRelation = Relation<Rational>;
using TropRelation = Relation<TropValue>;

// Quotient flags: each records an extra congruence/order generator imposed on
// the presentation (idempotent: 1+1 ~ 1; totally positive: 0 <= 1).
struct BlueprintFlags {
    bool idempotent = false;
    bool totally_positive = false;

    bool operator==(const BlueprintFlags& o) const = default;
};

// A finitely presented ordered blueprint: a variable monoid, a coefficient
// domain (rationals carrying a valuation, or tropical magnitudes), a list of
// relations between formal sums, and quotient flags.
class BlueprintPresentation {
public:
    enum class Domain { FieldQ, Trop };

    static BlueprintPresentation field(MonoidSignature sig, Valuation v,
                                       std::vector<FieldRelation> relations,
                                       BlueprintFlags flags = {});
    static BlueprintPresentation tropical(MonoidSignature sig,
                                          std::vector<TropRelation> relations,
                                          BlueprintFlags flags = {});

    Domain domain() const { return domain_; }
    bool is_tropical() const { return domain_ == Domain::Trop; }
    const MonoidSignature& signature() const { return sig_; }
    const BlueprintFlags& flags() const { return flags_; }

    // The valuation attached to a FieldQ coefficient domain; throws
    // std::logic_error for tropical presentations.
    const Valuation& valuation() const;

    const std::vector<FieldRelation>& field_relations() const;
    const std::vector<TropRelation>& trop_relations() const;

    bool operator==(const BlueprintPresentation& o) const = default;

    // Multi-line human-readable listing.
    std::string to_string() const;

private:
    BlueprintPresentation() = default;

    Domain domain_ = Domain::FieldQ;
    MonoidSignature sig_;
    Valuation valuation_ = Valuation::trivial();
    std::vector<FieldRelation> field_relations_;
    std::vector<TropRelation> trop_relations_;
    BlueprintFlags flags_;
};

// The monomial presentation of an ideal: for each nonzero generator
// p = sum_i c_i m_i emit
//     0 <= sum_i c_i m_i            (the full relation), and
//     (-c_i) m_i <= sum_{j != i} c_j m_j   for every i.
// Zero generators contribute nothing.  Relations are sorted and deduplicated.
// The valuation is attached to the coefficient domain for later base change.
BlueprintPresentation monomial_blueprint(const std::vector<FieldPolynomial>& gens,
                                         const MonoidSignature& sig,
                                         const Valuation& v);

// Base change along the attached valuation: every coefficient c is replaced
// by its magnitude v(c), turning a FieldQ presentation into a tropical one.
// Relation kinds and flags survive; collapsed duplicates are removed.
BlueprintPresentation base_change_to_T(const BlueprintPresentation& b);

// Impose the idempotency congruence 1+1 ~ 1 (recorded as a flag).
BlueprintPresentation apply_idem(const BlueprintPresentation& b);

// Impose total positivity 0 <= 1 (recorded as a flag).
BlueprintPresentation apply_pos(const BlueprintPresentation& b);

// The algebraic core: forget the partial order.  Keeps Eqv relations and the
// idempotency flag (a congruence), drops Leq relations and total positivity
// (order data).
BlueprintPresentation core(const BlueprintPresentation& b);

// Normal form in the idempotent quotient: collect duplicate monomials,
// keeping the maximum coefficient.  A fixed point of itself, and monotone:
// nf(s + t) == nf(nf(s) + nf(t)).
TropFormalSum idem_normal_form(const TropFormalSum& s);

// Order criterion of the idempotent+positive quotient semiring: x <= y there
// exactly when x + y collapses onto y.
bool idem_leq(const TropFormalSum& x, const TropFormalSum& y);

}  // namespace trop
