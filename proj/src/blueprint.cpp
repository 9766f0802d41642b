#include "trop/blueprint.hpp"

#include <algorithm>
#include <stdexcept>

namespace trop {

namespace {

template <typename Coeff>
void sort_dedup(std::vector<Relation<Coeff>>& rels) {
    for (auto& r : rels) r.normalize();
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
}

template <typename Coeff>
void validate_sums(const std::vector<Relation<Coeff>>& rels, const MonoidSignature& sig) {
    auto check_sum = [&sig](const FormalSum<Coeff>& s) {
        for (const auto& t : s.terms()) {
            if (t.mono.num_vars() != sig.num_vars)
                throw std::invalid_argument("presentation: relation term has " +
                                            std::to_string(t.mono.num_vars()) +
                                            " variables, expected " +
                                            std::to_string(sig.num_vars));
            if (!sig.laurent) {
                for (int e : t.mono.exponents())
                    if (e < 0)
                        throw std::invalid_argument(
                            "presentation: negative exponent in non-Laurent signature");
            }
        }
    };
    for (const auto& r : rels) {
        check_sum(r.lhs);
        check_sum(r.rhs);
    }
}

}  // namespace

BlueprintPresentation BlueprintPresentation::field(MonoidSignature sig, Valuation v,
                                                   std::vector<FieldRelation> relations,
                                                   BlueprintFlags flags) {
    if (sig.num_vars < 1)
        throw std::invalid_argument("presentation: signature needs at least one variable");
    validate_sums(relations, sig);
    sort_dedup(relations);
    BlueprintPresentation b;
    b.domain_ = Domain::FieldQ;
    b.sig_ = sig;
    b.valuation_ = v;
    b.field_relations_ = std::move(relations);
    b.flags_ = flags;
    return b;
}

BlueprintPresentation BlueprintPresentation::tropical(MonoidSignature sig,
                                                      std::vector<TropRelation> relations,
                                                      BlueprintFlags flags) {
    if (sig.num_vars < 1)
        throw std::invalid_argument("presentation: signature needs at least one variable");
    validate_sums(relations, sig);
    sort_dedup(relations);
    BlueprintPresentation b;
    b.domain_ = Domain::Trop;
    b.sig_ = sig;
    b.trop_relations_ = std::move(relations);
    b.flags_ = flags;
    return b;
}

const Valuation& BlueprintPresentation::valuation() const {
    if (domain_ != Domain::FieldQ)
        throw std::logic_error("presentation: tropical domain carries no valuation");
    return valuation_;
}

const std::vector<FieldRelation>& BlueprintPresentation::field_relations() const {
    if (domain_ != Domain::FieldQ)
        throw std::logic_error("presentation: no field relations in tropical domain");
    return field_relations_;
}

const std::vector<TropRelation>& BlueprintPresentation::trop_relations() const {
    if (domain_ != Domain::Trop)
        throw std::logic_error("presentation: no tropical relations in FieldQ domain");
    return trop_relations_;
}

std::string BlueprintPresentation::to_string() const {
    std::string out = "blueprint over ";
    out += (domain_ == Domain::FieldQ) ? ("Q with valuation " + valuation_.to_string())
                                       : "T";
    out += ", " + std::to_string(sig_.num_vars) + " variable(s)";
    if (sig_.laurent) out += " (Laurent)";
    if (flags_.idempotent) out += ", idempotent";
    if (flags_.totally_positive) out += ", totally positive";
    out += "\n";
    if (domain_ == Domain::FieldQ) {
        for (const auto& r : field_relations_) out += "  " + r.to_string() + "\n";
    } else {
        for (const auto& r : trop_relations_) out += "  " + r.to_string() + "\n";
    }
    return out;
}

BlueprintPresentation monomial_blueprint(const std::vector<FieldPolynomial>& gens,
                                         const MonoidSignature& sig,
                                         const Valuation& v) {
    std::vector<FieldRelation> rels;
    for (const auto& p : gens) {
        if (p.signature() != sig)
            throw std::invalid_argument("monomial blueprint: generator signature mismatch");
        if (p.is_zero()) continue;
        FieldFormalSum full = to_formal_sum(p);
        rels.push_back(FieldRelation::leq(FieldFormalSum::zero(), full));
        for (std::size_t i = 0; i < full.size(); ++i) {
            const FieldTerm& t = full.term(i);
            rels.push_back(FieldRelation::leq(
                FieldFormalSum::single(FieldTerm{-t.coeff, t.mono}),
                full.without_index(i)));
        }
    }
    return BlueprintPresentation::field(sig, v, std::move(rels));
}

BlueprintPresentation base_change_to_T(const BlueprintPresentation& b) {
    if (b.is_tropical())
        throw std::invalid_argument("base change: presentation is already tropical");
    const Valuation& v = b.valuation();
    auto push_sum = [&v](const FieldFormalSum& s) {
        TropFormalSum out;
        for (const auto& t : s.terms())
            out.add_term(TropTerm{apply_valuation(v, t.coeff), t.mono});
        return out;
    };
    std::vector<TropRelation> rels;
    rels.reserve(b.field_relations().size());
    for (const auto& r : b.field_relations())
        rels.push_back(TropRelation{push_sum(r.lhs), push_sum(r.rhs), r.kind});
    return BlueprintPresentation::tropical(b.signature(), std::move(rels), b.flags());
}

namespace {

BlueprintPresentation with_flags(const BlueprintPresentation& b, BlueprintFlags flags) {
    if (b.is_tropical())
        return BlueprintPresentation::tropical(b.signature(), b.trop_relations(), flags);
    return BlueprintPresentation::field(b.signature(), b.valuation(), b.field_relations(),
                                        flags);
}

}  // namespace

BlueprintPresentation apply_idem(const BlueprintPresentation& b) {
    BlueprintFlags f = b.flags();
    f.idempotent = true;
    return with_flags(b, f);
}

BlueprintPresentation apply_pos(const BlueprintPresentation& b) {
    BlueprintFlags f = b.flags();
    f.totally_positive = true;
    return with_flags(b, f);
}

BlueprintPresentation core(const BlueprintPresentation& b) {
    BlueprintFlags f = b.flags();
    f.totally_positive = false;  // order data; the idempotency congruence stays
    if (b.is_tropical()) {
        std::vector<TropRelation> keep;
        for (const auto& r : b.trop_relations())
            if (r.kind == RelationKind::Eqv) keep.push_back(r);
        return BlueprintPresentation::tropical(b.signature(), std::move(keep), f);
    }
    std::vector<FieldRelation> keep;
    for (const auto& r : b.field_relations())
        if (r.kind == RelationKind::Eqv) keep.push_back(r);
    return BlueprintPresentation::field(b.signature(), b.valuation(), std::move(keep), f);
}

TropFormalSum idem_normal_form(const TropFormalSum& s) {
    std::map<Monomial, TropValue, GradedLexDescending> best;
    for (const auto& t : s.terms()) {
        auto [it, inserted] = best.emplace(t.mono, t.coeff);
        if (!inserted && it->second < t.coeff) it->second = t.coeff;
    }
    TropFormalSum out;
    for (const auto& [m, c] : best) out.add_term(TropTerm{c, m});
    return out;
}

bool idem_leq(const TropFormalSum& x, const TropFormalSum& y) {
    return idem_normal_form(x.plus(y)) == idem_normal_form(y);
}

}  // namespace trop
