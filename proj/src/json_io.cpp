#include "trop/json_io.hpp"

#include <stdexcept>

namespace trop {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

Monomial monomial_from_exps(const json& j, const MonoidSignature& sig) {
    if (!j.is_array()) bad("\"exps\" must be an array");
    std::vector<int> exps;
    for (const auto& e : j) {
        if (!e.is_number_integer()) bad("exponents must be integers");
        exps.push_back(e.get<int>());
    }
    if (static_cast<int>(exps.size()) != sig.num_vars)
        bad("exponent count does not match the signature");
    if (!sig.laurent)
        for (int e : exps)
            if (e < 0) bad("negative exponent in a non-Laurent signature");
    return Monomial(std::move(exps));
}

}  // namespace

json to_json(const Rational& r) { return r.to_fraction_string(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) bad("rational must be a \"num/den\" string");
    return Rational::from_string(j.get<std::string>());
}

json to_json(const MonoidSignature& sig) {
    return json{{"num_vars", sig.num_vars}, {"laurent", sig.laurent}};
}

MonoidSignature signature_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num_vars")) bad("signature needs \"num_vars\"");
    MonoidSignature sig;
    sig.num_vars = j.at("num_vars").get<int>();
    sig.laurent = j.value("laurent", false);
    if (sig.num_vars < 1) bad("signature needs at least one variable");
    return sig;
}

json to_json(const FieldTerm& t) {
    return json{{"coeff", t.coeff.to_fraction_string()}, {"exps", t.mono.exponents()}};
}

json to_json(const TropTerm& t) {
    return json{{"coeff", t.coeff.to_fraction_string()}, {"exps", t.mono.exponents()}};
}

json to_json(const FieldFormalSum& s) {
    json out = json::array();
    for (const auto& t : s.terms()) out.push_back(to_json(t));
    return out;
}

json to_json(const TropFormalSum& s) {
    json out = json::array();
    for (const auto& t : s.terms()) out.push_back(to_json(t));
    return out;
}

FieldFormalSum field_sum_from_json(const json& j, const MonoidSignature& sig) {
    if (!j.is_array()) bad("formal sum must be an array of terms");
    FieldFormalSum out;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
            bad("term needs \"coeff\" and \"exps\"");
        out.add_term(FieldTerm{rational_from_json(t.at("coeff")),
                               monomial_from_exps(t.at("exps"), sig)});
    }
    return out;
}

TropFormalSum trop_sum_from_json(const json& j, const MonoidSignature& sig) {
    if (!j.is_array()) bad("formal sum must be an array of terms");
    TropFormalSum out;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
            bad("term needs \"coeff\" and \"exps\"");
        Rational c = rational_from_json(t.at("coeff"));
        if (c.sign() < 0) bad("tropical coefficients must be nonnegative");
        out.add_term(TropTerm{TropValue(c), monomial_from_exps(t.at("exps"), sig)});
    }
    return out;
}

json to_json(const FieldPolynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(json{{"coeff", c.to_fraction_string()}, {"exps", m.exponents()}});
    return json{{"sig", to_json(p.signature())}, {"terms", std::move(terms)}};
}

FieldPolynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sig") || !j.contains("terms"))
        bad("polynomial needs \"sig\" and \"terms\"");
    MonoidSignature sig = signature_from_json(j.at("sig"));
    FieldPolynomial out(sig);
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
            bad("term needs \"coeff\" and \"exps\"");
        out.add_term(monomial_from_exps(t.at("exps"), sig),
                     rational_from_json(t.at("coeff")));
    }
    return out;
}

namespace {

json valuation_to_json(const Valuation& v) {
    if (v.kind() == Valuation::Kind::Trivial) return json{{"kind", "trivial"}};
    return json{{"kind", "padic"}, {"prime", v.prime()}};
}

Valuation valuation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) bad("valuation needs \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "trivial") return Valuation::trivial();
    if (kind == "padic") {
        if (!j.contains("prime")) bad("padic valuation needs \"prime\"");
        return Valuation::padic(j.at("prime").get<long>());
    }
    bad("unknown valuation kind \"" + kind + "\"");
}

const char* kind_name(RelationKind k) {
    return k == RelationKind::Leq ? "leq" : "eqv";
}

RelationKind kind_from_name(const std::string& s) {
    if (s == "leq") return RelationKind::Leq;
    if (s == "eqv") return RelationKind::Eqv;
    bad("unknown relation kind \"" + s + "\"");
}

}  // namespace

json to_json(const BlueprintPresentation& b) {
    json rels = json::array();
    if (b.is_tropical()) {
        for (const auto& r : b.trop_relations())
            rels.push_back(json{{"lhs", to_json(r.lhs)},
                                {"rhs", to_json(r.rhs)},
                                {"kind", kind_name(r.kind)}});
    } else {
        for (const auto& r : b.field_relations())
            rels.push_back(json{{"lhs", to_json(r.lhs)},
                                {"rhs", to_json(r.rhs)},
                                {"kind", kind_name(r.kind)}});
    }
    json out{{"sig", to_json(b.signature())},
             {"coeff_domain", b.is_tropical() ? "trop" : "fieldQ"},
             {"relations", std::move(rels)},
             {"flags",
              json{{"idempotent", b.flags().idempotent},
                   {"totally_positive", b.flags().totally_positive}}}};
    if (!b.is_tropical()) out["valuation"] = valuation_to_json(b.valuation());
    return out;
}

BlueprintPresentation presentation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sig") || !j.contains("coeff_domain") ||
        !j.contains("relations"))
        bad("presentation needs \"sig\", \"coeff_domain\", and \"relations\"");
    MonoidSignature sig = signature_from_json(j.at("sig"));
    BlueprintFlags flags;
    if (j.contains("flags")) {
        flags.idempotent = j.at("flags").value("idempotent", false);
        flags.totally_positive = j.at("flags").value("totally_positive", false);
    }
    std::string domain = j.at("coeff_domain").get<std::string>();
    if (domain == "trop") {
        std::vector<TropRelation> rels;
        for (const auto& r : j.at("relations")) {
            TropRelation rel{trop_sum_from_json(r.at("lhs"), sig),
                             trop_sum_from_json(r.at("rhs"), sig),
                             kind_from_name(r.at("kind").get<std::string>())};
            rel.normalize();
            rels.push_back(std::move(rel));
        }
        return BlueprintPresentation::tropical(sig, std::move(rels), flags);
    }
    if (domain != "fieldQ") bad("unknown coefficient domain \"" + domain + "\"");
    if (!j.contains("valuation")) bad("fieldQ presentation needs \"valuation\"");
    Valuation v = valuation_from_json(j.at("valuation"));
    std::vector<FieldRelation> rels;
    for (const auto& r : j.at("relations")) {
        FieldRelation rel{field_sum_from_json(r.at("lhs"), sig),
                          field_sum_from_json(r.at("rhs"), sig),
                          kind_from_name(r.at("kind").get<std::string>())};
        rel.normalize();
        rels.push_back(std::move(rel));
    }
    return BlueprintPresentation::field(sig, v, std::move(rels), flags);
}

json points_to_json(const std::vector<TropPoint>& members) {
    json pts = json::array();
    for (const auto& p : members) {
        json coords = json::array();
        for (const auto& c : p.coords()) coords.push_back(c.to_fraction_string());
        pts.push_back(std::move(coords));
    }
    return json{{"points", std::move(pts)}, {"count", members.size()}};
}

std::string points_to_csv(const std::vector<TropPoint>& grid,
                          const std::vector<bool>& member) {
    if (grid.size() != member.size())
        throw std::invalid_argument("csv: grid and membership sizes differ");
    std::string out;
    if (!grid.empty()) {
        for (int i = 1; i <= grid.front().num_vars(); ++i) {
            out += "x" + std::to_string(i) + ",";
        }
        out += "member\n";
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (const auto& c : grid[i].coords()) out += c.to_fraction_string() + ",";
        out += member[i] ? "1\n" : "0\n";
    }
    return out;
}

std::string points_to_plot(const std::vector<TropPoint>& members, int precision) {
    std::string out;
    for (const auto& p : members) {
        std::string line;
        for (const auto& c : p.coords()) {
            if (!line.empty()) line += " ";
            line += c.value().to_decimal_string(precision);
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace trop
