// trop: exact tropical-scheme calculator.
//
//   tropicalize   rewrite ideal generators into a tropical presentation
//   sample        membership point clouds over a rational grid
//   bend          bend relations with machine-checked derivation pairs
//   analytify-a1  seminorm catalog on the affine line and its tropical image
//   verify        deterministic self-check suites
//
// Set TROP_LOG=1 for progress notes on stderr.

#include "trop/berkovich.hpp"
#include "trop/blueprint.hpp"
#include "trop/entail.hpp"
#include "trop/json_io.hpp"
#include "trop/parse.hpp"
#include "trop/tropicalization.hpp"
#include "trop/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace trop;

bool log_enabled() {
    const char* env = std::getenv("TROP_LOG");
    return env != nullptr && *env != '\0' && std::string(env) != "0";
}

void log_note(const std::string& msg) {
    if (log_enabled()) std::cerr << "[trop] " << msg << "\n";
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::vector<FieldPolynomial> parse_generators(const std::vector<std::string>& texts,
                                              const MonoidSignature& sig) {
    if (texts.empty()) throw std::runtime_error("no generators given (use --gens)");
    std::vector<FieldPolynomial> gens;
    gens.reserve(texts.size());
    for (const auto& t : texts) gens.push_back(parse_polynomial(t, sig));
    return gens;
}

// "--box lo:hi[,lo:hi...]" plus "--step s[,s...]"; single entries replicate
// across all axes.
std::vector<GridAxis> parse_box(const std::string& box, const std::string& step,
                                int num_vars) {
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::istringstream in(s);
        std::string piece;
        while (std::getline(in, piece, sep)) out.push_back(piece);
        return out;
    };
    std::vector<std::string> ranges = split(box, ',');
    std::vector<std::string> steps = split(step, ',');
    if (ranges.size() == 1) ranges.resize(static_cast<std::size_t>(num_vars), ranges[0]);
    if (steps.size() == 1) steps.resize(static_cast<std::size_t>(num_vars), steps[0]);
    if (ranges.size() != static_cast<std::size_t>(num_vars) ||
        steps.size() != static_cast<std::size_t>(num_vars))
        throw std::runtime_error("--box/--step must give one entry or one per variable");
    std::vector<GridAxis> axes;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        auto bounds = split(ranges[i], ':');
        if (bounds.size() != 2)
            throw std::runtime_error("--box entries must look like lo:hi, got \"" +
                                     ranges[i] + "\"");
        axes.push_back(GridAxis{Rational::from_string(bounds[0]),
                                Rational::from_string(bounds[1]),
                                Rational::from_string(steps[i])});
    }
    return axes;
}

struct CommonOptions {
    std::vector<std::string> gens;
    std::string valuation = "trivial";
    int vars = 2;
    bool laurent = false;
    std::string format = "json";
    std::string out = "-";
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_gens = true) {
    if (with_gens)
        cmd->add_option("--gens", opt.gens, "generator polynomials, e.g. \"T1+T2+1\"");
    cmd->add_option("--valuation", opt.valuation, "trivial or padic:<p>")
        ->default_val("trivial");
    cmd->add_option("--vars", opt.vars, "number of variables")->default_val(2);
    cmd->add_flag("--laurent", opt.laurent, "allow negative exponents");
    cmd->add_option("--format", opt.format, "json, csv, plot, or text")
        ->default_val("json");
    cmd->add_option("--out", opt.out, "output path, - for stdout")->default_val("-");
}

int cmd_tropicalize(const CommonOptions& opt) {
    MonoidSignature sig{opt.vars, opt.laurent};
    std::vector<FieldPolynomial> gens = parse_generators(opt.gens, sig);
    Valuation v = Valuation::from_string(opt.valuation);
    BlueprintPresentation field = monomial_blueprint(gens, sig, v);
    log_note("monomial presentation:\n" + field.to_string());
    BlueprintPresentation tropical = base_change_to_T(field);
    if (opt.format == "json") {
        write_output(opt.out, to_json(tropical).dump(2) + "\n");
    } else if (opt.format == "text") {
        write_output(opt.out, tropical.to_string());
    } else {
        throw std::runtime_error("tropicalize supports --format json or text");
    }
    return 0;
}

int cmd_sample(const CommonOptions& opt, const std::string& box, const std::string& step,
               int precision) {
    MonoidSignature sig{opt.vars, opt.laurent};
    std::vector<FieldPolynomial> gens = parse_generators(opt.gens, sig);
    Valuation v = Valuation::from_string(opt.valuation);
    BlueprintPresentation bt = base_change_to_T(monomial_blueprint(gens, sig, v));
    std::vector<GridAxis> axes = parse_box(box, step, opt.vars);
    std::vector<TropPoint> grid = grid_points(axes);
    std::vector<bool> member;
    std::vector<TropPoint> members;
    member.reserve(grid.size());
    for (const auto& x : grid) {
        bool m = trop_point_member(bt, x);
        member.push_back(m);
        if (m) members.push_back(x);
    }
    log_note("grid points: " + std::to_string(grid.size()) +
             ", members: " + std::to_string(members.size()));
    if (gens.size() > 1)
        std::cerr << "note: membership is relative to the given generators, which may "
                     "not cut out the full tropicalization of the ideal\n";
    if (opt.format == "json") {
        json out = points_to_json(members);
        out["grid_points"] = grid.size();
        out["relative_to_generators"] = gens.size() > 1;
        write_output(opt.out, out.dump(2) + "\n");
    } else if (opt.format == "csv") {
        write_output(opt.out, points_to_csv(grid, member));
    } else if (opt.format == "plot") {
        write_output(opt.out, points_to_plot(members, precision));
    } else {
        throw std::runtime_error("sample supports --format json, csv, or plot");
    }
    return 0;
}

// Chain d1 ("x <= y") and d2 ("y <= z") into one derivation of x <= z.
Derivation chain_derivations(const Derivation& d1, const Derivation& d2) {
    Derivation out = d1;
    std::size_t shift = d1.steps.size();
    for (ProofStep s : d2.steps) {
        switch (s.rule) {
            case RuleKind::AddBoth:
            case RuleKind::MulBoth:
                s.premise += shift;
                break;
            case RuleKind::Transitivity:
                s.premise += shift;
                s.premise2 += shift;
                break;
            default:
                break;
        }
        out.steps.push_back(std::move(s));
    }
    out.steps.push_back(
        ProofStep::transitivity(shift - 1, out.steps.size() - 1));
    out.conclusion = TropRelation::leq(d1.conclusion.lhs, d2.conclusion.rhs);
    return out;
}

int cmd_bend(const CommonOptions& opt, bool with_search, int depth) {
    MonoidSignature sig{opt.vars, opt.laurent};
    std::vector<FieldPolynomial> gens = parse_generators(opt.gens, sig);
    Valuation v = Valuation::from_string(opt.valuation);
    BlueprintPresentation bt =
        apply_pos(apply_idem(base_change_to_T(monomial_blueprint(gens, sig, v))));
    log_note("quotient presentation:\n" + bt.to_string());

    json families = json::array();
    std::string text;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        TropFormalSum full = tropicalize_poly(gens[gi], v);
        if (full.empty()) continue;
        std::vector<BendRelation> brs = bend_relations({gens[gi]}, v);

        // Congruence classes: the full sum, then each reduced sum.
        std::vector<TropFormalSum> classes{full};
        std::vector<DerivationPair> to_full(1);  // index 0 unused (full itself)
        for (const auto& br : brs) {
            classes.push_back(br.reduced);
            to_full.push_back(derive_bend_pair(bt, br));
        }

        json jclasses = json::array(), jpairs = json::array();
        for (const auto& c : classes)
            jclasses.push_back(json{{"sum", to_json(c)}, {"text", c.to_string()}});
        text += "generator " + std::to_string(gi) + ": " + gens[gi].to_string() + "\n";
        for (std::size_t i = 0; i < classes.size(); ++i)
            text += "  class " + std::to_string(i) + ": " + classes[i].to_string() + "\n";

        for (std::size_t i = 0; i < classes.size(); ++i) {
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                // Derivations i <= j and j <= i, routed through the full sum.
                Derivation fwd, bwd;
                if (i == 0) {
                    fwd = to_full[j].forward;
                    bwd = to_full[j].backward;
                } else {
                    fwd = chain_derivations(to_full[i].backward, to_full[j].forward);
                    bwd = chain_derivations(to_full[j].backward, to_full[i].forward);
                }
                if (!check_derivation(bt, fwd) || !check_derivation(bt, bwd))
                    throw std::logic_error("bend: constructed derivation failed to check");
                json jpair{{"from", i},
                           {"to", j},
                           {"forward", to_proof_script(fwd, sig)},
                           {"backward", to_proof_script(bwd, sig)}};
                std::string note = "derivations checked";
                if (with_search) {
                    SearchResult sr =
                        search_leq(bt, TropRelation::leq(classes[i], classes[j]), depth);
                    bool found = sr.status == SearchStatus::Found;
                    jpair["search"] = found ? "found" : "unknown";
                    note += found ? ", search found" : ", search unknown";
                }
                jpairs.push_back(std::move(jpair));
                text += "  pair (" + std::to_string(i) + ", " + std::to_string(j) +
                        "): " + note + "\n";
            }
        }
        families.push_back(json{{"generator_index", gi},
                                {"generator", gens[gi].to_string()},
                                {"classes", std::move(jclasses)},
                                {"pairs", std::move(jpairs)}});
    }

    if (opt.format == "json") {
        json out{{"presentation", to_json(bt)}, {"families", std::move(families)}};
        write_output(opt.out, out.dump(2) + "\n");
    } else if (opt.format == "text") {
        write_output(opt.out, text);
    } else {
        throw std::runtime_error("bend supports --format json or text");
    }
    return 0;
}

int cmd_analytify(const std::vector<std::string>& f_texts, const std::string& radius_text,
                  const std::string& format, const std::string& out_path, int precision) {
    Rational radius = Rational::from_string(radius_text);
    std::vector<SeminormDescriptor> catalog;
    if (f_texts.empty()) {
        catalog = default_catalog(radius);
    } else {
        MonoidSignature uni{1, false};
        catalog.push_back(SeminormDescriptor::trivial_norm());
        for (const auto& text : f_texts) {
            FieldPolynomial f = parse_polynomial(text, uni);
            if (auto irr = irreducibility_lint(f); irr.has_value() && !*irr)
                std::cerr << "warning: " << f.to_string()
                          << " is reducible; its f-adic values may fail "
                             "multiplicativity\n";
            catalog.push_back(SeminormDescriptor::f_adic(f, radius));
            catalog.push_back(SeminormDescriptor::f_adic_zero(f));
        }
        catalog.push_back(SeminormDescriptor::infinity_adic(radius));
    }

    json rows = json::array();
    std::string csv = "seminorm,u1,u2,nontrivial,on_line\n";
    std::string plot;
    for (const auto& w : catalog) {
        LineTropImage img = line_trop_image(w);
        rows.push_back(json{{"seminorm", w.to_string()},
                            {"u1", img.u1.to_fraction_string()},
                            {"u2", img.u2.to_fraction_string()},
                            {"nontrivial", img.nontrivial},
                            {"on_line", img.on_line}});
        csv += w.to_string() + "," + img.u1.to_fraction_string() + "," +
               img.u2.to_fraction_string() + "," + (img.nontrivial ? "1" : "0") + "," +
               (img.on_line ? "1" : "0") + "\n";
        plot += img.u1.value().to_decimal_string(precision) + " " +
                img.u2.value().to_decimal_string(precision) + "\n";
    }
    if (format == "json") {
        write_output(out_path, json{{"seminorms", std::move(rows)}}.dump(2) + "\n");
    } else if (format == "csv") {
        write_output(out_path, csv);
    } else if (format == "plot") {
        write_output(out_path, plot);
    } else {
        throw std::runtime_error("analytify-a1 supports --format json, csv, or plot");
    }
    return 0;
}

int cmd_verify(std::uint64_t seed, const std::string& out_path) {
    std::ostringstream report;
    bool ok = run_verify(seed, report);
    write_output(out_path, report.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tropical-scheme calculator"};
    app.require_subcommand(1);

    CommonOptions trop_opt;
    CLI::App* trop_cmd =
        app.add_subcommand("tropicalize", "tropical presentation of an ideal");
    add_common(trop_cmd, trop_opt);

    CommonOptions sample_opt;
    std::string box = "0:4";
    std::string step = "1/4";
    int precision = 6;
    CLI::App* sample_cmd = app.add_subcommand("sample", "membership point cloud");
    add_common(sample_cmd, sample_opt);
    sample_cmd->add_option("--box", box, "per-axis lo:hi ranges, comma separated")
        ->default_val("0:4");
    sample_cmd->add_option("--step", step, "per-axis grid step")->default_val("1/4");
    sample_cmd->add_option("--precision", precision, "decimal digits for plot output")
        ->default_val(6);

    CommonOptions bend_opt;
    bool bend_search = false;
    int bend_depth = 6;
    CLI::App* bend_cmd =
        app.add_subcommand("bend", "bend relations and derivation pairs");
    add_common(bend_cmd, bend_opt);
    bend_cmd->add_flag("--search", bend_search,
                       "also run the bounded entailment search on each pair");
    bend_cmd->add_option("--depth", bend_depth, "search depth (with --search)")
        ->default_val(6);

    std::vector<std::string> ana_f;
    std::string ana_radius = "1/2";
    std::string ana_format = "json";
    std::string ana_out = "-";
    int ana_precision = 6;
    CLI::App* ana_cmd = app.add_subcommand(
        "analytify-a1", "seminorm catalog on the line and its tropical image");
    ana_cmd->add_option("--gens", ana_f,
                        "monic polynomials f for the f-adic families "
                        "(default: a built-in catalog)");
    ana_cmd->add_option("--radius", ana_radius, "radius r with 0 < r < 1")
        ->default_val("1/2");
    ana_cmd->add_option("--format", ana_format, "json, csv, or plot")->default_val("json");
    ana_cmd->add_option("--out", ana_out, "output path, - for stdout")->default_val("-");
    ana_cmd->add_option("--precision", ana_precision, "decimal digits for plot output")
        ->default_val(6);

    std::uint64_t seed = 0;
    std::string verify_out = "-";
    CLI::App* verify_cmd = app.add_subcommand("verify", "deterministic self-checks");
    verify_cmd->add_option("--seed", seed, "RNG seed")->default_val(0);
    verify_cmd->add_option("--out", verify_out, "output path, - for stdout")
        ->default_val("-");

    CLI11_PARSE(app, argc, argv);

    try {
        if (trop_cmd->parsed()) return cmd_tropicalize(trop_opt);
        if (sample_cmd->parsed()) return cmd_sample(sample_opt, box, step, precision);
        if (bend_cmd->parsed()) return cmd_bend(bend_opt, bend_search, bend_depth);
        if (ana_cmd->parsed())
            return cmd_analytify(ana_f, ana_radius, ana_format, ana_out, ana_precision);
        if (verify_cmd->parsed()) return cmd_verify(seed, verify_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
