#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hfdlab/report.hpp"
#include "hfdlab/text.hpp"

namespace {

using namespace hfdlab;

// Splits on commas outside parentheses, so both "2,3,4" and
// "(1,0),(0,1)" style class lists parse.
std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

// Flag wins over HFDLAB_CAP, which wins over the built-in default.
std::size_t resolve_cap(std::optional<std::size_t> flag_cap) {
    if (flag_cap) {
        if (*flag_cap == 0) throw InvalidParameterError("--cap must be positive");
        return *flag_cap;
    }
    const char* env = std::getenv("HFDLAB_CAP");
    if (env == nullptr) return kDefaultResourceCap;
    const std::string text(env);
    if (text.empty()) throw InvalidParameterError("HFDLAB_CAP is empty");
    unsigned long long value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw InvalidParameterError("HFDLAB_CAP must be a positive integer, got '" + text +
                                        "'");
        }
        if (value > (~0ull - 9) / 10) throw InvalidParameterError("HFDLAB_CAP is too large");
        value = value * 10 + static_cast<unsigned long long>(c - '0');
    }
    if (value == 0) throw InvalidParameterError("HFDLAB_CAP must be positive");
    return static_cast<std::size_t>(value);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InvalidParameterError("cannot open output file '" + out_path + "'");
    out << text;
}

struct AnalyzeConfig {
    std::vector<int> moduli;
    std::string classes_text;
    std::vector<int> rs;
    std::vector<std::string> localize_at;
    int bound = 0;
    std::optional<std::size_t> cap;
    std::string format = "json";
    std::string out;
};

int run_analyze(const AnalyzeConfig& cfg) {
    // "--group 1" names the trivial group; the module spells it as an
    // empty modulus list.
    std::vector<int> moduli = cfg.moduli;
    if (moduli.size() == 1 && moduli[0] == 1) moduli.clear();
    const FiniteAbelianGroup group(moduli);

    std::vector<GroupElement> classes;
    for (const auto& token : split_commas(cfg.classes_text)) {
        classes.push_back(parse_element(token, group));
    }
    const ClassSubset cs(group, classes);

    AnalysisOptions options;
    options.rs = cfg.rs;
    options.ohfd_bound = cfg.bound;
    options.solver.candidate_cap = resolve_cap(cfg.cap);
    const AnalysisResult result = analyze(cs, options);

    if (cfg.format == "csv") {
        if (!cfg.localize_at.empty()) {
            throw InvalidParameterError("localization output is JSON only");
        }
        emit(atoms_csv(result), cfg.out);
        return 0;
    }

    Json doc = analysis_json(result);
    if (!cfg.localize_at.empty()) {
        std::vector<int> generators;
        for (const auto& literal : cfg.localize_at) {
            const ZeroSumSequence seq = parse_sequence(literal, cs);
            const int idx = result.atoms.index_of(seq);
            if (idx < 0) {
                throw LocalizationError("generator '" + literal + "' is not an atom");
            }
            generators.push_back(idx);
        }
        const LocalizationSetup setup =
            make_localization(cs, result.atoms, result.relations, result.classification,
                              generators, options.solver);
        const auto localized = localized_relations(setup, options.solver);
        const NagataCheck nagata = nagata_instance_check(setup, cfg.rs);
        std::vector<ClaimStarResult> stars;
        for (int idx : eligible_claim_star_atoms(setup)) {
            stars.push_back(claim_star_witness(setup, idx, cfg.bound, options.solver));
        }
        doc["localization"] = localization_json(setup, localized, nagata, stars);
    }
    emit(render(doc), cfg.out);
    return 0;
}

struct SurveyConfig {
    int max_order = 6;
    std::vector<std::string> checks;
    std::vector<int> rs = {2, 3, 4};
    std::optional<std::size_t> cap;
    std::string format = "json";
    std::string out;
};

int run_survey_command(const SurveyConfig& cfg) {
    if (cfg.format != "json") {
        throw InvalidParameterError("survey reports are JSON only");
    }
    SurveyOptions options;
    options.max_order = cfg.max_order;
    options.checks = cfg.checks;
    options.rs = cfg.rs;
    options.solver.candidate_cap = resolve_cap(cfg.cap);
    const SurveyResult result = run_survey(options);
    emit(render(survey_json(result)), cfg.out);
    return 0;
}

bool report_fixture(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
        std::cout << "PASS " << name << "\n";
    } else {
        std::cout << "FAIL " << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
    }
    return ok;
}

bool block_monoid_fixture() {
    const FiniteAbelianGroup group({6});
    const ClassSubset cs(group, {{2}, {3}, {4}});
    const AnalysisResult result = analyze(cs);

    std::vector<std::string> literals;
    for (const auto& atom : result.atoms.atoms()) {
        literals.push_back(format_sequence(atom, cs));
    }
    std::sort(literals.begin(), literals.end());
    const std::vector<std::string> expected = {"(2,2,2)", "(2,4)", "(3,3)", "(4,4,4)"};
    if (literals != expected) return false;

    const int two_cubed = result.atoms.index_of(parse_sequence("(2,2,2)", cs));
    const int four_cubed = result.atoms.index_of(parse_sequence("(4,4,4)", cs));
    const int pair = result.atoms.index_of(parse_sequence("(2,4)", cs));
    const int three_sq = result.atoms.index_of(parse_sequence("(3,3)", cs));

    const std::vector<std::size_t> good = {static_cast<std::size_t>(three_sq)};
    if (result.classification.good_indices() != good) return false;
    std::vector<std::size_t> bad = {static_cast<std::size_t>(two_cubed),
                                    static_cast<std::size_t>(four_cubed),
                                    static_cast<std::size_t>(pair)};
    std::sort(bad.begin(), bad.end());
    if (result.classification.bad_indices() != bad) return false;

    FactorizationVector lhs{std::vector<int>(result.atoms.size(), 0)};
    FactorizationVector rhs{std::vector<int>(result.atoms.size(), 0)};
    lhs.counts[static_cast<std::size_t>(two_cubed)] = 1;
    lhs.counts[static_cast<std::size_t>(four_cubed)] = 1;
    rhs.counts[static_cast<std::size_t>(pair)] = 3;
    const Relation witness = make_relation(result.atoms, lhs, rhs);
    return result.relations.size() == 1 && result.relations[0] == witness &&
           !result.report.is_hfd;
}

bool quadratic_equality_fixture() {
    const QuadraticInteger three = parse_quadratic("3", 14);
    const std::vector<QuadraticInteger> lhs = {three, three, three, three};
    const std::vector<QuadraticInteger> rhs = {parse_quadratic("5+2i14", 14),
                                               parse_quadratic("5-2i14", 14)};
    const EqualityReport report = verify_atomic_equality(lhs, rhs);
    return report.equal && report.all_atoms && report.lhs_length == 4 &&
           report.rhs_length == 2 && !report.balanced && report.irredundant;
}

bool polynomial_identity_fixture() {
    const PolynomialIdentityReport report = verify_polynomial_identity();
    return report.product_equal && report.factors_are_atoms && report.irredundant &&
           report.lhs_length == 3 && report.rhs_length == 2 && report.unbalanced &&
           report.two_is_bad;
}

int run_verify_examples() {
    bool ok = true;
    ok &= report_fixture("block monoid over Z/6 with classes {2,3,4}", block_monoid_fixture());
    ok &= report_fixture("atomic equality 3^4 = (5+2w)(5-2w) in Z[sqrt(-14)]",
                         quadratic_equality_fixture());
    ok &= report_fixture("polynomial identity 2*2*(X^2+X+1) over Z[sqrt(-3)]",
                         polynomial_identity_fixture());
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for half-factoriality of block monoids"};
    app.require_subcommand(1);

    AnalyzeConfig analyze_cfg;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "analyze one (group, class subset) instance");
    analyze_cmd->add_option("--group", analyze_cfg.moduli, "group moduli, e.g. 6 or 2,2")
        ->required()
        ->delimiter(',');
    analyze_cmd
        ->add_option("--classes", analyze_cfg.classes_text,
                     "classes, e.g. 2,3,4 (tuples as a:b for rank >= 2)")
        ->required();
    analyze_cmd->add_option("--r", analyze_cfg.rs, "congruence moduli for r-variants")
        ->delimiter(',');
    analyze_cmd->add_option("--localize-at", analyze_cfg.localize_at,
                            "atom literals generating the inverted set, e.g. (3,3)");
    analyze_cmd->add_option("--bound", analyze_cfg.bound,
                            "content-length bound for the distinct-length scan and the "
                            "balanced-insertion search");
    analyze_cmd->add_option("--cap", analyze_cfg.cap, "solver candidate cap");
    analyze_cmd->add_option("--format", analyze_cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    analyze_cmd->add_option("--out", analyze_cfg.out, "output file (default stdout)");

    SurveyConfig survey_cfg;
    CLI::App* survey_cmd =
        app.add_subcommand("survey", "scan all class subsets of small groups");
    survey_cmd->add_option("--max-order", survey_cfg.max_order, "largest group order (<= 8)");
    survey_cmd
        ->add_option("--check", survey_cfg.checks,
                     "kaplansky, rchfd, prop4, nagata, ohfd-ufd (default all)")
        ->delimiter(',');
    survey_cmd->add_option("--r", survey_cfg.rs, "congruence moduli for r-variants")
        ->delimiter(',');
    survey_cmd->add_option("--cap", survey_cfg.cap, "solver candidate cap");
    survey_cmd->add_option("--format", survey_cfg.format, "json")
        ->check(CLI::IsMember({"json", "csv"}));
    survey_cmd->add_option("--out", survey_cfg.out, "output file (default stdout)");

    CLI::App* verify_cmd =
        app.add_subcommand("verify-examples", "run the fixed worked-example suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(analyze_cfg);
        if (survey_cmd->parsed()) return run_survey_command(survey_cfg);
        if (verify_cmd->parsed()) return run_verify_examples();
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
