#include "trop/verify.hpp"

#include "trop/berkovich.hpp"
#include "trop/blueprint.hpp"
#include "trop/entail.hpp"
#include "trop/hyperfield.hpp"
#include "trop/parse.hpp"
#include "trop/random.hpp"
#include "trop/tropicalization.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace trop {

namespace {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Fold the list through the extended semiring and compare the value set with
// the closed-form hypersum.  Exercises two independent code paths.
bool hypersum_matches_fold(const std::vector<TropValue>& values) {
    HyperSet direct = hypersum_n(values);
    ExtendedTrop acc = ExtendedTrop::point(values.front());
    for (std::size_t i = 1; i < values.size(); ++i)
        acc = ext_add(acc, ExtendedTrop::point(values[i]));
    return to_hyperset(acc) == direct;
}

TropValue random_value(SplitMix64& rng) {
    static const long nums[] = {0, 1, 1, 2, 3, 5, 9};
    long n = nums[rng.below(7)];
    long d = rng.range(1, 4);
    return TropValue(Rational(n, d));
}

FieldPolynomial random_polynomial(SplitMix64& rng, const MonoidSignature& sig) {
    FieldPolynomial p(sig);
    int terms = static_cast<int>(rng.range(2, 4));
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(static_cast<std::size_t>(sig.num_vars), 0);
        int budget = static_cast<int>(rng.range(0, 3));
        for (int b = 0; b < budget; ++b)
            ++exps[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(sig.num_vars)))];
        long c = rng.range(1, 9);
        if (rng.coin()) c = -c;
        p.add_term(Monomial(std::move(exps)), Rational(c));
    }
    return p;
}

SuiteResult suite_line_grid(SplitMix64&) {
    SuiteResult out{"line-grid-agreement", false, ""};
    MonoidSignature sig{2, false};
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 1", sig)};
    std::vector<GridAxis> axes{{Rational(0), Rational(4), Rational(1, 4)},
                               {Rational(0), Rational(4), Rational(1, 4)}};
    AgreementReport rep = bend_vs_trop_points(gens, sig, Valuation::trivial(), axes);
    std::ostringstream d;
    d << "points=" << rep.points_checked << " members=" << rep.members
      << " disagreements=" << rep.disagreements.size();
    out.detail = d.str();
    out.passed = rep.points_checked == 289 && rep.members == 21 && rep.ok();
    return out;
}

SuiteResult suite_hypersum(SplitMix64& rng) {
    SuiteResult out{"nary-hypersum", false, ""};
    std::size_t checked = 0, failed = 0;
    for (int i = 0; i < 300; ++i) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 6));
        std::vector<TropValue> values;
        for (std::size_t k = 0; k < n; ++k) values.push_back(random_value(rng));
        ++checked;
        if (!hypersum_matches_fold(values)) ++failed;
        // leq_T must agree with containment in the closed-form hypersum.
        TropValue c = random_value(rng);
        if (leq_T(c, values) != hypersum_n(values).contains(c)) ++failed;
    }
    std::ostringstream d;
    d << "lists=" << checked << " failures=" << failed;
    out.detail = d.str();
    out.passed = failed == 0;
    return out;
}

SuiteResult suite_bend_derivations(SplitMix64& rng) {
    SuiteResult out{"bend-derivations", false, ""};
    std::size_t relations = 0, failures = 0;
    std::vector<Valuation> vals{Valuation::trivial(), Valuation::padic(3)};
    for (int round = 0; round < 10; ++round) {
        MonoidSignature sig{static_cast<int>(rng.range(1, 3)), false};
        FieldPolynomial p = random_polynomial(rng, sig);
        if (p.is_zero()) continue;
        for (const auto& v : vals) {
            std::vector<FieldPolynomial> gens{p};
            BlueprintPresentation bt =
                apply_pos(apply_idem(base_change_to_T(monomial_blueprint(gens, sig, v))));
            for (const auto& br : bend_relations(gens, v)) {
                ++relations;
                try {
                    DerivationPair pair = derive_bend_pair(bt, br);
                    if (!check_derivation(bt, pair.forward) ||
                        !check_derivation(bt, pair.backward))
                        ++failures;
                } catch (const std::exception&) {
                    ++failures;
                }
            }
        }
    }
    std::ostringstream d;
    d << "bend-relations=" << relations << " failures=" << failures;
    out.detail = d.str();
    out.passed = failures == 0 && relations > 0;
    return out;
}

SuiteResult suite_seminorm_axioms(SplitMix64& rng) {
    SuiteResult out{"valuation-axioms", false, ""};
    std::size_t violations = 0, pairs = 0, decs = 0;
    for (long p : {2L, 3L, 5L}) {
        Valuation v = Valuation::padic(p);
        std::vector<std::pair<Rational, Rational>> sample;
        for (int i = 0; i < 500; ++i)
            sample.emplace_back(rng.rational(200, 50), rng.rational(200, 50));
        std::vector<std::vector<Rational>> decomps;
        for (int i = 0; i < 100; ++i) {
            std::vector<Rational> parts;
            long n = rng.range(1, 5);
            for (long k = 0; k < n; ++k) parts.push_back(rng.rational(100, 20));
            decomps.push_back(std::move(parts));
        }
        SeminormCheck check = check_seminorm_axioms(v, sample, decomps);
        pairs += check.pairs_checked;
        decs += check.decompositions_checked;
        violations += check.violations.size();
    }
    std::ostringstream d;
    d << "pairs=" << pairs << " decompositions=" << decs << " violations=" << violations;
    out.detail = d.str();
    out.passed = violations == 0;
    return out;
}

SuiteResult suite_berkovich(SplitMix64& rng) {
    SuiteResult out{"seminorm-catalog", false, ""};
    std::vector<SeminormDescriptor> catalog = default_catalog(Rational(1, 2));
    std::set<std::string> nontrivial, expected{
        "fadic(T1; 1/2)",        "fadic0(T1)", "fadic(T1 + 1; 1/2)",
        "fadic0(T1 + 1)",        "infinity(1/2)"};
    bool all_on_line = true, constants_trivial = true;
    MonoidSignature uni{1, false};
    for (const auto& w : catalog) {
        LineTropImage img = line_trop_image(w);
        if (img.nontrivial) nontrivial.insert(w.to_string());
        all_on_line = all_on_line && img.on_line;
        for (int i = 0; i < 5; ++i) {
            Rational c = rng.rational(40, 10);
            if (c.is_zero()) c = Rational(1);
            FieldPolynomial cp(uni);
            cp.add_term(Monomial::unit(1), c);
            constants_trivial =
                constants_trivial && eval_seminorm(w, cp) == TropValue::one();
        }
    }
    std::ostringstream d;
    d << "catalog=" << catalog.size() << " nontrivial=" << nontrivial.size()
      << " on-line=" << (all_on_line ? "yes" : "no")
      << " constants-trivial=" << (constants_trivial ? "yes" : "no");
    out.detail = d.str();
    out.passed = nontrivial == expected && all_on_line && constants_trivial;
    return out;
}

SuiteResult suite_idem_normal_form(SplitMix64& rng) {
    SuiteResult out{"idempotent-normal-form", false, ""};
    std::size_t failures = 0;
    MonoidSignature sig{2, false};
    auto random_sum = [&rng, &sig]() {
        TropFormalSum s;
        long n = rng.range(0, 5);
        for (long k = 0; k < n; ++k) {
            std::vector<int> exps{static_cast<int>(rng.range(0, 2)),
                                  static_cast<int>(rng.range(0, 2))};
            s.add_term(TropTerm{random_value(rng), Monomial(std::move(exps))});
        }
        (void)sig;
        return s;
    };
    for (int i = 0; i < 200; ++i) {
        TropFormalSum s = random_sum(), t = random_sum();
        TropFormalSum ns = idem_normal_form(s);
        if (idem_normal_form(ns) != ns) ++failures;
        if (idem_normal_form(s.plus(t)) != idem_normal_form(ns.plus(idem_normal_form(t))))
            ++failures;
        if (!idem_leq(s, ns) || !idem_leq(ns, s)) ++failures;
        // Collected: no monomial twice.
        std::set<std::vector<int>> seen;
        for (const auto& term : ns.terms())
            if (!seen.insert(term.mono.exponents()).second) ++failures;
    }
    std::ostringstream d;
    d << "sums=200 failures=" << failures;
    out.detail = d.str();
    out.passed = failures == 0;
    return out;
}

SuiteResult suite_extended_semiring(SplitMix64& rng) {
    SuiteResult out{"extended-semiring-laws", false, ""};
    std::size_t failures = 0;
    auto random_ext = [&rng]() {
        TropValue v = random_value(rng);
        return rng.coin() ? ExtendedTrop::point(v) : ExtendedTrop::ghost(v);
    };
    for (int i = 0; i < 200; ++i) {
        ExtendedTrop a = random_ext(), b = random_ext(), c = random_ext();
        if (ext_add(a, b) != ext_add(b, a)) ++failures;
        if (ext_mul(a, b) != ext_mul(b, a)) ++failures;
        if (ext_add(ext_add(a, b), c) != ext_add(a, ext_add(b, c))) ++failures;
        if (ext_mul(ext_mul(a, b), c) != ext_mul(a, ext_mul(b, c))) ++failures;
        if (ext_mul(a, ext_add(b, c)) != ext_add(ext_mul(a, b), ext_mul(a, c)))
            ++failures;
        if (ext_add(a, ExtendedTrop::zero()) != a) ++failures;
        if (ext_mul(a, ExtendedTrop::one()) != a) ++failures;
    }
    std::ostringstream d;
    d << "triples=200 failures=" << failures;
    out.detail = d.str();
    out.passed = failures == 0;
    return out;
}

SuiteResult suite_padic_grid(SplitMix64&) {
    SuiteResult out{"padic-grid-agreement", false, ""};
    MonoidSignature sig{2, false};
    std::vector<FieldPolynomial> gens{parse_polynomial("T1 + T2 + 3", sig)};
    std::vector<GridAxis> axes{{Rational(0), Rational(1), Rational(1, 12)},
                               {Rational(0), Rational(1), Rational(1, 12)}};
    AgreementReport rep = bend_vs_trop_points(gens, sig, Valuation::padic(3), axes);
    std::ostringstream d;
    d << "points=" << rep.points_checked << " members=" << rep.members
      << " disagreements=" << rep.disagreements.size();
    out.detail = d.str();
    out.passed = rep.points_checked == 169 && rep.members == 17 && rep.ok();
    return out;
}

}  // namespace

bool run_verify(std::uint64_t seed, std::ostream& out) {
    SplitMix64 rng(seed);
    std::vector<SuiteResult> results;
    results.push_back(suite_line_grid(rng));
    results.push_back(suite_hypersum(rng));
    results.push_back(suite_bend_derivations(rng));
    results.push_back(suite_seminorm_axioms(rng));
    results.push_back(suite_berkovich(rng));
    results.push_back(suite_idem_normal_form(rng));
    results.push_back(suite_extended_semiring(rng));
    results.push_back(suite_padic_grid(rng));

    out << "verify seed=" << seed << "\n";
    std::size_t passed = 0;
    for (const auto& r : results) {
        out << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.detail
            << ")\n";
        if (r.passed) ++passed;
    }
    out << "result: " << (passed == results.size() ? "PASS" : "FAIL") << " (" << passed
        << "/" << results.size() << ")\n";
    return passed == results.size();
}

}  // namespace trop
