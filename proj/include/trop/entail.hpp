#pragma once

#include "trop/blueprint.hpp"
#include "trop/tropicalization.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace trop {

// Inference rules for order derivations over a tropical presentation.
//
//   Generator    cite relation i of the presentation (a congruence may be
//                cited in either direction, an inequality only forward)
//   Reflexivity  x <= x for any formal sum x
//   AddBoth      from x <= y conclude x+t <= y+t for a term t
//   MulBoth      from x <= y conclude t*x <= t*y for a term t
//   Transitivity from x <= y and y <= z conclude x <= z
//   IdemAxiom    t+t <= t (or reversed t <= t+t); requires the idempotent
//                flag, being the 1+1 ~ 1 generator scaled by t
//   PosAxiom     0 <= t; requires the totally-positive flag (0 <= 1 scaled)
enum class RuleKind {
    Generator,
    Reflexivity,
    AddBoth,
    MulBoth,
    Transitivity,
    IdemAxiom,
    PosAxiom,
};

// One derivation step.  Only the fields relevant to the rule are read:
// Generator uses generator_index (+ reversed for congruences), Reflexivity
// uses sum, AddBoth/MulBoth use term and premise, Transitivity uses premise
// and premise2, IdemAxiom uses term (+ reversed), PosAxiom uses term.
struct ProofStep {
    RuleKind rule = RuleKind::Reflexivity;
    std::size_t generator_index = 0;
    bool reversed = false;
    TropTerm term{TropValue::zero(), Monomial()};
    TropFormalSum sum;
    std::size_t premise = 0;
    std::size_t premise2 = 0;

    static ProofStep generator(std::size_t i, bool rev = false);
    static ProofStep reflexivity(TropFormalSum x);
    static ProofStep add_both(std::size_t premise, TropTerm t);
    static ProofStep mul_both(std::size_t premise, TropTerm t);
    static ProofStep transitivity(std::size_t p1, std::size_t p2);
    static ProofStep idem_axiom(TropTerm t, bool rev = false);
    static ProofStep pos_axiom(TropTerm t);

    bool operator==(const ProofStep& o) const = default;
};

// A derivation: steps in order (premises point backwards) and the inequality
// the final step is claimed to conclude.
struct Derivation {
    std::vector<ProofStep> steps;
    TropRelation conclusion;

    bool operator==(const Derivation& o) const = default;
};

// Replays a derivation against a tropical presentation.  Returns true when
// every step follows and the final relation equals the conclusion as
// multisets.  Throws std::invalid_argument on structural problems: empty
// derivations, premise or generator indices out of range, a reversed citation
// of an inequality, IdemAxiom without the idempotent flag, PosAxiom without
// the totally-positive flag, a non-tropical presentation, or a non-Leq
// conclusion.
bool check_derivation(const BlueprintPresentation& bt, const Derivation& d);

// The relations each step concludes, for inspection and error reporting.
std::vector<TropRelation> replay_derivation(const BlueprintPresentation& bt,
                                            const Derivation& d);

// Machine-built derivations of both inequalities of a bend relation:
// forward "full <= reduced" (generator, padding, idempotent collapse) and
// backward "reduced <= full" (positivity, padding).  Requires both quotient
// flags and a presentation containing the generator "dropped term <=
// reduced"; throws std::invalid_argument otherwise.
struct DerivationPair {
    Derivation forward;
    Derivation backward;
};

DerivationPair derive_bend_pair(const BlueprintPresentation& bt, const BendRelation& r);

// Bounded breadth-first search for a derivation of target (a Leq relation).
// depth counts rounds; each round applies one AddBoth/MulBoth (terms drawn
// from the target and the presentation) to the frontier and then closes
// under Transitivity.  Exhaustion or cap overflow yields Unknown, never a
// claim of underivability.
enum class SearchStatus { Found, Unknown };

struct SearchResult {
    SearchStatus status = SearchStatus::Unknown;
    std::optional<Derivation> derivation;
    std::size_t relations_explored = 0;
};

SearchResult search_leq(const BlueprintPresentation& bt, const TropRelation& target,
                        int depth);

// Line-oriented proof script serialization.  Scripts start with a signature
// line ("vars <n> [laurent]") and a "target <lhs> <= <rhs>" line, then one
// step per line; '#' starts a comment.  parse_proof_script accepts exactly
// what to_proof_script emits.
std::string to_proof_script(const Derivation& d, const MonoidSignature& sig);
Derivation parse_proof_script(std::string_view text, MonoidSignature* sig_out = nullptr);

}  // namespace trop
