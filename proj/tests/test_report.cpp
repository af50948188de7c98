#include "doctest.h"

#include "hfdlab/report.hpp"
#include "hfdlab/text.hpp"

using namespace hfdlab;

namespace {

AnalysisResult worked_instance() {
    const FiniteAbelianGroup z6({6});
    const ClassSubset cs(z6, {{2}, {3}, {4}});
    AnalysisOptions options;
    options.rs = {2};
    return analyze(cs, options);
}

} // namespace

TEST_CASE("analysis report shape and content") {
    const AnalysisResult result = worked_instance();
    const Json doc = analysis_json(result);

    CHECK(doc["schema"] == 1);
    CHECK(doc["group"]["moduli"] == Json::array({6}));
    CHECK(doc["classes"] == Json::array({"2", "3", "4"}));

    REQUIRE(doc["atoms"].size() == 4);
    CHECK(doc["atoms"][0]["seq"]["3"] == 2);
    CHECK(doc["atoms"][0]["literal"] == "(3,3)");
    CHECK(doc["atoms"][0]["length"] == 2);
    CHECK(doc["atoms"][1]["literal"] == "(2,4)");

    REQUIRE(doc["relations"].size() == 1);
    const Json& rel = doc["relations"][0];
    CHECK(rel["lhs"] == Json{{"2", 1}, {"3", 1}});
    CHECK(rel["rhs"] == Json{{"1", 3}});
    CHECK(rel["lengths"] == Json::array({2, 3}));
    CHECK(rel["irredundant"] == true);

    CHECK(doc["classification"]["good"] == Json::array({0}));
    CHECK(doc["classification"]["bad"] == Json::array({1, 2, 3}));
    CHECK(doc["classification"]["witness"]["1"] == 0);
    CHECK(doc["classification"]["r"]["2"]["bad"] == Json::array({1, 2, 3}));

    const Json& verdicts = doc["analysis"];
    CHECK(verdicts["is_hfd"] == false);
    CHECK(verdicts["r_chfd"]["2"] == false);
    CHECK(verdicts["distance_witnesses"] == Json::array({1}));
    CHECK(verdicts["coverage"]["covered"] == Json::array({"3"}));
    CHECK(verdicts["coverage"]["uncovered"] == Json::array({"2", "4"}));
    CHECK(verdicts["coverage"]["all_covered"] == false);
    CHECK(verdicts["coverage"]["equivalence_holds"] == true);
    CHECK(verdicts["is_factorial"] == false);
    CHECK(verdicts["ohfd"] == true);
    CHECK(verdicts["ohfd_bound"] == 8);
}

TEST_CASE("rendering is byte-stable across repeated runs") {
    const std::string first = render(analysis_json(worked_instance()));
    const std::string second = render(analysis_json(worked_instance()));
    CHECK(first == second);
    CHECK(first.back() == '\n');

    SurveyOptions options;
    options.max_order = 3;
    CHECK(render(survey_json(run_survey(options))) ==
          render(survey_json(run_survey(options))));
}

TEST_CASE("atom table as CSV") {
    const std::string csv = atoms_csv(worked_instance());
    const std::string expected = "index,atom,length,good,r2_good\n"
                                 "0,\"(3,3)\",2,true,true\n"
                                 "1,\"(2,4)\",2,false,false\n"
                                 "2,\"(4,4,4)\",3,false,false\n"
                                 "3,\"(2,2,2)\",3,false,false\n";
    CHECK(csv == expected);
}

TEST_CASE("localization report shape") {
    const FiniteAbelianGroup z4({4});
    const ClassSubset cs(z4, {{1}, {2}});
    const AnalysisResult result = analyze(cs);
    const int two_sq = result.atoms.index_of(make_sequence(cs, {0, 2}));
    const LocalizationSetup setup = make_localization(
        cs, result.atoms, result.relations, result.classification, {two_sq});
    const auto relations = localized_relations(setup);
    const NagataCheck nagata = nagata_instance_check(setup, {2});
    std::vector<ClaimStarResult> stars;
    for (int idx : eligible_claim_star_atoms(setup)) {
        stars.push_back(claim_star_witness(setup, idx));
    }

    const Json doc = localization_json(setup, relations, nagata, stars);
    CHECK(doc["s_generators"] == Json::array({two_sq}));
    CHECK(doc["B"] == Json::array({two_sq}));
    CHECK(doc["C"].size() == 1);
    CHECK(doc["relations"].empty());
    CHECK(doc["nagata"]["hfd"]["localized"] == true);
    CHECK(doc["nagata"]["hfd"]["base"] == true);
    CHECK(doc["nagata"]["hfd"]["consistent"] == true);
    CHECK(doc["nagata"]["r"]["2"]["consistent"] == true);
    REQUIRE(doc["claim_star"].size() == 1);
    CHECK(doc["claim_star"][0]["found"] == true);
    CHECK(doc["claim_star"][0]["bound"] == 16);
    CHECK(doc["claim_star"][0]["s_factors"].size() == 1);
    CHECK(doc["claim_star"][0]["mixed_factors"].size() == 2);
}

TEST_CASE("survey and fixture reports") {
    SurveyOptions options;
    options.max_order = 2;
    options.checks = {"kaplansky"};
    const Json doc = survey_json(run_survey(options));
    CHECK(doc["schema"] == 1);
    CHECK(doc["survey"]["max_order"] == 2);
    CHECK(doc["survey"]["checks"] == Json::array({"kaplansky"}));
    CHECK(doc["survey"]["instances"] > 0);
    CHECK(doc["survey"]["counterexamples"].empty());

    const QuadraticInteger three = make_quadratic(3, 0, 14);
    const EqualityReport eq = verify_atomic_equality(
        {three, three, three, three},
        {make_quadratic(5, 2, 14), make_quadratic(5, -2, 14)});
    const Json eq_doc = equality_json(eq);
    CHECK(eq_doc["equal"] == true);
    CHECK(eq_doc["lengths"] == Json::array({4, 2}));

    const Json poly_doc = polynomial_identity_json(verify_polynomial_identity());
    CHECK(poly_doc["two_is_bad"] == true);
    CHECK(poly_doc["lengths"] == Json::array({3, 2}));
}
