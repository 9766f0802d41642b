#include "trop/entail.hpp"

#include "trop/parse.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace trop {

ProofStep ProofStep::generator(std::size_t i, bool rev) {
    ProofStep s;
    s.rule = RuleKind::Generator;
    s.generator_index = i;
    s.reversed = rev;
    return s;
}

ProofStep ProofStep::reflexivity(TropFormalSum x) {
    ProofStep s;
    s.rule = RuleKind::Reflexivity;
    s.sum = std::move(x);
    return s;
}

ProofStep ProofStep::add_both(std::size_t premise, TropTerm t) {
    ProofStep s;
    s.rule = RuleKind::AddBoth;
    s.premise = premise;
    s.term = std::move(t);
    return s;
}

ProofStep ProofStep::mul_both(std::size_t premise, TropTerm t) {
    ProofStep s;
    s.rule = RuleKind::MulBoth;
    s.premise = premise;
    s.term = std::move(t);
    return s;
}

ProofStep ProofStep::transitivity(std::size_t p1, std::size_t p2) {
    ProofStep s;
    s.rule = RuleKind::Transitivity;
    s.premise = p1;
    s.premise2 = p2;
    return s;
}

ProofStep ProofStep::idem_axiom(TropTerm t, bool rev) {
    ProofStep s;
    s.rule = RuleKind::IdemAxiom;
    s.term = std::move(t);
    s.reversed = rev;
    return s;
}

ProofStep ProofStep::pos_axiom(TropTerm t) {
    ProofStep s;
    s.rule = RuleKind::PosAxiom;
    s.term = std::move(t);
    return s;
}

namespace {

// Thrown when a step's premises don't fit the rule (a logical non-sequitur,
// distinct from a structurally malformed derivation).
class StepDoesNotFollow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace

std::vector<TropRelation> replay_derivation(const BlueprintPresentation& bt,
                                            const Derivation& d) {
    if (!bt.is_tropical())
        throw std::invalid_argument("derivation: presentation must be tropical");
    if (d.steps.empty()) throw std::invalid_argument("derivation: no steps");
    const auto& gens = bt.trop_relations();
    std::vector<TropRelation> rels;
    rels.reserve(d.steps.size());
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const ProofStep& s = d.steps[i];
        auto premise_rel = [&](std::size_t p) -> const TropRelation& {
            if (p >= i)
                throw std::invalid_argument("derivation: step " + std::to_string(i) +
                                            " cites premise " + std::to_string(p) +
                                            " which is not an earlier step");
            return rels[p];
        };
        switch (s.rule) {
            case RuleKind::Generator: {
                if (s.generator_index >= gens.size())
                    throw std::invalid_argument("derivation: generator index " +
                                                std::to_string(s.generator_index) +
                                                " out of range");
                const TropRelation& g = gens[s.generator_index];
                if (g.kind == RelationKind::Eqv) {
                    rels.push_back(s.reversed ? TropRelation::leq(g.rhs, g.lhs)
                                              : TropRelation::leq(g.lhs, g.rhs));
                } else {
                    if (s.reversed)
                        throw std::invalid_argument(
                            "derivation: inequality generators cannot be cited reversed");
                    rels.push_back(TropRelation::leq(g.lhs, g.rhs));
                }
                break;
            }
            case RuleKind::Reflexivity:
                rels.push_back(TropRelation::leq(s.sum, s.sum));
                break;
            case RuleKind::AddBoth: {
                const TropRelation& p = premise_rel(s.premise);
                TropFormalSum t = TropFormalSum::single(s.term);
                rels.push_back(TropRelation::leq(p.lhs.plus(t), p.rhs.plus(t)));
                break;
            }
            case RuleKind::MulBoth: {
                const TropRelation& p = premise_rel(s.premise);
                rels.push_back(TropRelation::leq(p.lhs.times_term(s.term),
                                                 p.rhs.times_term(s.term)));
                break;
            }
            case RuleKind::Transitivity: {
                const TropRelation& p = premise_rel(s.premise);
                const TropRelation& q = premise_rel(s.premise2);
                if (p.rhs != q.lhs)
                    throw StepDoesNotFollow("derivation: step " + std::to_string(i) +
                                            ": transitivity sides do not chain (" +
                                            p.rhs.to_string() + " vs " +
                                            q.lhs.to_string() + ")");
                rels.push_back(TropRelation::leq(p.lhs, q.rhs));
                break;
            }
            case RuleKind::IdemAxiom: {
                if (!bt.flags().idempotent)
                    throw std::invalid_argument(
                        "derivation: IdemAxiom requires the idempotent flag");
                TropFormalSum one = TropFormalSum::single(s.term);
                TropFormalSum two = one.plus(one);
                rels.push_back(s.reversed ? TropRelation::leq(one, two)
                                          : TropRelation::leq(two, one));
                break;
            }
            case RuleKind::PosAxiom: {
                if (!bt.flags().totally_positive)
                    throw std::invalid_argument(
                        "derivation: PosAxiom requires the totally-positive flag");
                rels.push_back(TropRelation::leq(TropFormalSum::zero(),
                                                 TropFormalSum::single(s.term)));
                break;
            }
        }
    }
    return rels;
}

bool check_derivation(const BlueprintPresentation& bt, const Derivation& d) {
    if (d.conclusion.kind != RelationKind::Leq)
        throw std::invalid_argument("derivation: conclusion must be an inequality");
    std::vector<TropRelation> rels;
    try {
        rels = replay_derivation(bt, d);
    } catch (const StepDoesNotFollow&) {
        return false;
    }
    const TropRelation& last = rels.back();
    return last.lhs == d.conclusion.lhs && last.rhs == d.conclusion.rhs;
}

DerivationPair derive_bend_pair(const BlueprintPresentation& bt, const BendRelation& r) {
    if (!bt.is_tropical())
        throw std::invalid_argument("bend pair: presentation must be tropical");
    if (!bt.flags().idempotent || !bt.flags().totally_positive)
        throw std::invalid_argument(
            "bend pair: presentation needs both the idempotent and totally-positive "
            "flags");
    if (r.dropped_term_index >= r.full.size())
        throw std::invalid_argument("bend pair: dropped term index out of range");
    const TropTerm& e = r.full.term(r.dropped_term_index);
    if (r.full.without_index(r.dropped_term_index) != r.reduced)
        throw std::invalid_argument(
            "bend pair: reduced side is not the full side minus the dropped term");

    // Locate the generator "e <= reduced" (a congruence citation also works).
    const auto& gens = bt.trop_relations();
    TropFormalSum lhs = TropFormalSum::single(e);
    std::size_t gen_index = gens.size();
    bool gen_reversed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].lhs == lhs && gens[i].rhs == r.reduced) {
            gen_index = i;
            break;
        }
        if (gens[i].kind == RelationKind::Eqv && gens[i].rhs == lhs &&
            gens[i].lhs == r.reduced) {
            gen_index = i;
            gen_reversed = true;
            break;
        }
    }
    if (gen_index == gens.size())
        throw std::invalid_argument("bend pair: no generator matches " + lhs.to_string() +
                                    " <= " + r.reduced.to_string());

    const TropFormalSum& R = r.reduced;
    DerivationPair pair;

    // Forward: full <= reduced.
    {
        std::vector<ProofStep>& steps = pair.forward.steps;
        steps.push_back(ProofStep::generator(gen_index, gen_reversed));
        if (!R.empty()) {
            // Pad both sides by every reduced term: e + R <= R + R.
            std::size_t last = 0;
            for (std::size_t k = 0; k < R.size(); ++k) {
                steps.push_back(ProofStep::add_both(last, R.term(k)));
                last = steps.size() - 1;
            }
            std::size_t padded = last;
            // Collapse R + R <= R one duplicated term at a time.
            TropFormalSum cur = R.plus(R);
            std::size_t collapse = 0;
            bool have_collapse = false;
            for (std::size_t k = 0; k < R.size(); ++k) {
                const TropTerm& t = R.term(k);
                steps.push_back(ProofStep::idem_axiom(t));
                std::size_t seg = steps.size() - 1;
                TropFormalSum rest = cur.minus_one(t).minus_one(t);
                for (const auto& s : rest.terms()) {
                    steps.push_back(ProofStep::add_both(seg, s));
                    seg = steps.size() - 1;
                }
                if (have_collapse) {
                    steps.push_back(ProofStep::transitivity(collapse, seg));
                    collapse = steps.size() - 1;
                } else {
                    collapse = seg;
                    have_collapse = true;
                }
                cur = rest.plus(TropFormalSum::single(t));
            }
            steps.push_back(ProofStep::transitivity(padded, collapse));
        }
        pair.forward.conclusion = TropRelation::leq(r.full, R);
    }

    // Backward: reduced <= full, from positivity of the dropped term.
    {
        std::vector<ProofStep>& steps = pair.backward.steps;
        steps.push_back(ProofStep::pos_axiom(e));
        std::size_t last = 0;
        for (std::size_t k = 0; k < R.size(); ++k) {
            steps.push_back(ProofStep::add_both(last, R.term(k)));
            last = steps.size() - 1;
        }
        pair.backward.conclusion = TropRelation::leq(R, r.full);
    }

    // Both derivations are built to check; verify as insurance.
    if (!check_derivation(bt, pair.forward) || !check_derivation(bt, pair.backward))
        throw std::logic_error("bend pair: constructed derivation failed to check");
    return pair;
}

namespace {

// Where a discovered relation came from, for derivation reconstruction.
struct Provenance {
    RuleKind rule = RuleKind::Reflexivity;
    std::size_t generator_index = 0;
    bool reversed = false;
    TropTerm term{TropValue::zero(), Monomial()};
    TropFormalSum sum;
    // Premise relations as (lhs, rhs) keys; empty when the rule is a leaf.
    std::vector<TropRelation> premises;
};

using KnownMap = std::map<TropRelation, Provenance>;

std::size_t emit_steps(const TropRelation& rel, const KnownMap& known,
                       std::map<TropRelation, std::size_t>& placed,
                       std::vector<ProofStep>& steps) {
    if (auto it = placed.find(rel); it != placed.end()) return it->second;
    const Provenance& p = known.at(rel);
    ProofStep step;
    switch (p.rule) {
        case RuleKind::Generator:
            step = ProofStep::generator(p.generator_index, p.reversed);
            break;
        case RuleKind::Reflexivity:
            step = ProofStep::reflexivity(p.sum);
            break;
        case RuleKind::IdemAxiom:
            step = ProofStep::idem_axiom(p.term, p.reversed);
            break;
        case RuleKind::PosAxiom:
            step = ProofStep::pos_axiom(p.term);
            break;
        case RuleKind::AddBoth:
            step = ProofStep::add_both(emit_steps(p.premises[0], known, placed, steps),
                                       p.term);
            break;
        case RuleKind::MulBoth:
            step = ProofStep::mul_both(emit_steps(p.premises[0], known, placed, steps),
                                       p.term);
            break;
        case RuleKind::Transitivity: {
            std::size_t a = emit_steps(p.premises[0], known, placed, steps);
            std::size_t b = emit_steps(p.premises[1], known, placed, steps);
            step = ProofStep::transitivity(a, b);
            break;
        }
    }
    steps.push_back(std::move(step));
    placed.emplace(rel, steps.size() - 1);
    return steps.size() - 1;
}

}  // namespace

SearchResult search_leq(const BlueprintPresentation& bt, const TropRelation& target,
                        int depth) {
    if (!bt.is_tropical())
        throw std::invalid_argument("search: presentation must be tropical");
    if (target.kind != RelationKind::Leq)
        throw std::invalid_argument("search: target must be an inequality");
    if (depth < 0) throw std::invalid_argument("search: negative depth");

    const auto& gens = bt.trop_relations();

    // Candidate terms for AddBoth/MulBoth: everything visible in the target
    // and the presentation.
    std::vector<TropTerm> harvest;
    auto harvest_sum = [&harvest](const TropFormalSum& s) {
        for (const auto& t : s.terms())
            if (std::find(harvest.begin(), harvest.end(), t) == harvest.end())
                harvest.push_back(t);
    };
    harvest_sum(target.lhs);
    harvest_sum(target.rhs);
    for (const auto& g : gens) {
        harvest_sum(g.lhs);
        harvest_sum(g.rhs);
    }

    // Size caps keep the search bounded; exhaustion means Unknown.
    std::size_t lhs_cap = std::max<std::size_t>(target.lhs.size(), 2);
    std::size_t rhs_cap = std::max<std::size_t>(target.rhs.size(), 2);
    for (const auto& g : gens) {
        lhs_cap = std::max(lhs_cap, g.lhs.size());
        rhs_cap = std::max(rhs_cap, g.rhs.size());
    }
    lhs_cap += 2;
    rhs_cap = rhs_cap * 2 + 2;
    constexpr std::size_t kMaxKnown = 50000;

    KnownMap known;
    std::map<TropFormalSum, std::vector<TropRelation>> by_lhs, by_rhs;
    std::deque<TropRelation> closure_queue;
    std::vector<TropRelation> frontier;
    bool overflowed = false;

    auto try_insert = [&](TropRelation rel, Provenance prov) {
        if (rel.lhs.size() > lhs_cap || rel.rhs.size() > rhs_cap) return;
        if (known.size() >= kMaxKnown) {
            overflowed = true;
            return;
        }
        auto [it, inserted] = known.emplace(std::move(rel), std::move(prov));
        if (!inserted) return;
        by_lhs[it->first.lhs].push_back(it->first);
        by_rhs[it->first.rhs].push_back(it->first);
        closure_queue.push_back(it->first);
        frontier.push_back(it->first);
    };

    // Chain every queued relation against everything known, within a round.
    auto close_transitively = [&]() {
        while (!closure_queue.empty()) {
            TropRelation rel = closure_queue.front();
            closure_queue.pop_front();
            if (auto it = by_lhs.find(rel.rhs); it != by_lhs.end()) {
                for (const auto& next : std::vector<TropRelation>(it->second)) {
                    Provenance prov;
                    prov.rule = RuleKind::Transitivity;
                    prov.premises = {rel, next};
                    try_insert(TropRelation::leq(rel.lhs, next.rhs), std::move(prov));
                }
            }
            if (auto it = by_rhs.find(rel.lhs); it != by_rhs.end()) {
                for (const auto& prev : std::vector<TropRelation>(it->second)) {
                    Provenance prov;
                    prov.rule = RuleKind::Transitivity;
                    prov.premises = {prev, rel};
                    try_insert(TropRelation::leq(prev.lhs, rel.rhs), std::move(prov));
                }
            }
        }
    };

    // Seed: generators (congruences both ways), reflexivity at the target's
    // sides, and the flag axioms instantiated at every harvested term.
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Provenance prov;
        prov.rule = RuleKind::Generator;
        prov.generator_index = i;
        try_insert(TropRelation::leq(gens[i].lhs, gens[i].rhs), prov);
        if (gens[i].kind == RelationKind::Eqv) {
            prov.reversed = true;
            try_insert(TropRelation::leq(gens[i].rhs, gens[i].lhs), prov);
        }
    }
    for (const TropFormalSum& s : {target.lhs, target.rhs}) {
        Provenance prov;
        prov.rule = RuleKind::Reflexivity;
        prov.sum = s;
        try_insert(TropRelation::leq(s, s), std::move(prov));
    }
    for (const auto& t : harvest) {
        TropFormalSum one = TropFormalSum::single(t);
        TropFormalSum two = one.plus(one);
        if (bt.flags().idempotent) {
            Provenance prov;
            prov.rule = RuleKind::IdemAxiom;
            prov.term = t;
            try_insert(TropRelation::leq(two, one), prov);
            prov.reversed = true;
            try_insert(TropRelation::leq(one, two), prov);
        }
        if (bt.flags().totally_positive) {
            Provenance prov;
            prov.rule = RuleKind::PosAxiom;
            prov.term = t;
            try_insert(TropRelation::leq(TropFormalSum::zero(), one), std::move(prov));
        }
    }
    close_transitively();

    TropRelation want = TropRelation::leq(target.lhs, target.rhs);
    auto found = [&]() { return known.count(want) > 0; };

    for (int round = 0; round < depth && !found() && !overflowed; ++round) {
        std::vector<TropRelation> previous = std::move(frontier);
        frontier.clear();
        for (const auto& rel : previous) {
            for (const auto& t : harvest) {
                TropFormalSum one = TropFormalSum::single(t);
                Provenance add;
                add.rule = RuleKind::AddBoth;
                add.term = t;
                add.premises = {rel};
                try_insert(TropRelation::leq(rel.lhs.plus(one), rel.rhs.plus(one)),
                           std::move(add));
                Provenance mul;
                mul.rule = RuleKind::MulBoth;
                mul.term = t;
                mul.premises = {rel};
                try_insert(
                    TropRelation::leq(rel.lhs.times_term(t), rel.rhs.times_term(t)),
                    std::move(mul));
            }
        }
        close_transitively();
    }

    SearchResult result;
    result.relations_explored = known.size();
    if (found()) {
        result.status = SearchStatus::Found;
        Derivation d;
        std::map<TropRelation, std::size_t> placed;
        emit_steps(want, known, placed, d.steps);
        d.conclusion = want;
        result.derivation = std::move(d);
    }
    return result;
}

namespace {

std::string term_text(const TropTerm& t) { return t.to_string(); }

TropTerm parse_term_text(std::string_view text, const MonoidSignature& sig,
                         std::size_t line_no) {
    TropFormalSum s = parse_trop_sum(text, sig);
    if (s.size() > 1)
        throw std::invalid_argument("proof script line " + std::to_string(line_no) +
                                    ": expected a single term, got \"" +
                                    std::string(text) + "\"");
    if (s.empty()) return TropTerm{TropValue::zero(), Monomial::unit(sig.num_vars)};
    return s.term(0);
}

std::size_t parse_index(std::istringstream& in, std::size_t line_no) {
    long long v = -1;
    if (!(in >> v) || v < 0)
        throw std::invalid_argument("proof script line " + std::to_string(line_no) +
                                    ": expected a step index");
    return static_cast<std::size_t>(v);
}

}  // namespace

std::string to_proof_script(const Derivation& d, const MonoidSignature& sig) {
    std::string out = "vars " + std::to_string(sig.num_vars);
    if (sig.laurent) out += " laurent";
    out += "\n";
    out += "target " + d.conclusion.lhs.to_string() + " <= " +
           d.conclusion.rhs.to_string() + "\n";
    for (const auto& s : d.steps) {
        switch (s.rule) {
            case RuleKind::Generator:
                out += (s.reversed ? "genr " : "gen ") + std::to_string(s.generator_index);
                break;
            case RuleKind::Reflexivity:
                out += "refl " + s.sum.to_string();
                break;
            case RuleKind::AddBoth:
                out += "add " + std::to_string(s.premise) + " " + term_text(s.term);
                break;
            case RuleKind::MulBoth:
                out += "mul " + std::to_string(s.premise) + " " + term_text(s.term);
                break;
            case RuleKind::Transitivity:
                out += "trans " + std::to_string(s.premise) + " " +
                       std::to_string(s.premise2);
                break;
            case RuleKind::IdemAxiom:
                out += (s.reversed ? "idemr " : "idem ") + term_text(s.term);
                break;
            case RuleKind::PosAxiom:
                out += "pos " + term_text(s.term);
                break;
        }
        out += "\n";
    }
    return out;
}

Derivation parse_proof_script(std::string_view text, MonoidSignature* sig_out) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_sig = false, have_target = false;
    MonoidSignature sig;
    Derivation d;

    auto strip = [](std::string s) {
        if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
        auto begin = s.find_first_not_of(" \t\r");
        if (begin == std::string::npos) return std::string();
        auto end = s.find_last_not_of(" \t\r");
        return s.substr(begin, end - begin + 1);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip(line);
        if (body.empty()) continue;
        std::istringstream ls(body);
        std::string word;
        ls >> word;
        std::string rest;
        std::getline(ls, rest);
        rest = strip(rest);

        auto fail = [&](const std::string& why) -> Derivation {
            throw std::invalid_argument("proof script line " + std::to_string(line_no) +
                                        ": " + why);
        };

        if (word == "vars") {
            std::istringstream rs(rest);
            int n = 0;
            std::string extra;
            if (!(rs >> n) || n < 1) return fail("expected a variable count");
            sig.num_vars = n;
            if (rs >> extra) {
                if (extra != "laurent") return fail("unexpected token \"" + extra + "\"");
                sig.laurent = true;
            }
            have_sig = true;
            continue;
        }
        if (!have_sig) return fail("expected a \"vars\" line first");
        if (word == "target") {
            auto at = rest.find("<=");
            if (at == std::string::npos) return fail("expected \"lhs <= rhs\"");
            d.conclusion = TropRelation::leq(
                parse_trop_sum(strip(rest.substr(0, at)), sig),
                parse_trop_sum(strip(rest.substr(at + 2)), sig));
            have_target = true;
            continue;
        }
        if (word == "gen" || word == "genr") {
            std::istringstream rs(rest);
            d.steps.push_back(
                ProofStep::generator(parse_index(rs, line_no), word == "genr"));
        } else if (word == "refl") {
            d.steps.push_back(ProofStep::reflexivity(parse_trop_sum(rest, sig)));
        } else if (word == "add" || word == "mul") {
            std::istringstream rs(rest);
            std::size_t p = parse_index(rs, line_no);
            std::string term_str;
            std::getline(rs, term_str);
            TropTerm t = parse_term_text(strip(term_str), sig, line_no);
            d.steps.push_back(word == "add" ? ProofStep::add_both(p, std::move(t))
                                            : ProofStep::mul_both(p, std::move(t)));
        } else if (word == "trans") {
            std::istringstream rs(rest);
            std::size_t a = parse_index(rs, line_no);
            std::size_t b = parse_index(rs, line_no);
            d.steps.push_back(ProofStep::transitivity(a, b));
        } else if (word == "idem" || word == "idemr") {
            d.steps.push_back(
                ProofStep::idem_axiom(parse_term_text(rest, sig, line_no), word == "idemr"));
        } else if (word == "pos") {
            d.steps.push_back(ProofStep::pos_axiom(parse_term_text(rest, sig, line_no)));
        } else {
            return fail("unknown directive \"" + word + "\"");
        }
    }
    if (!have_sig) throw std::invalid_argument("proof script: missing \"vars\" line");
    if (!have_target) throw std::invalid_argument("proof script: missing \"target\" line");
    if (d.steps.empty()) throw std::invalid_argument("proof script: no steps");
    if (sig_out) *sig_out = sig;
    return d;
}

}  // namespace trop
