#pragma once

#include <string>

#include "json.hpp"

#include "hfdlab/analysis.hpp"
#include "hfdlab/localization.hpp"
#include "hfdlab/quadratic.hpp"
#include "hfdlab/survey.hpp"

namespace hfdlab {

/// Key order is insertion order, so every report is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

Json group_json(const FiniteAbelianGroup& group);
Json sequence_json(const ZeroSumSequence& s, const ClassSubset& cs);
Json relation_json(const Relation& rel);
Json localized_relation_json(const LocalizedRelation& rel);

/// Full analyze report: schema, group, classes, atoms, relations,
/// classification, and the verdict block.
Json analysis_json(const AnalysisResult& result);

/// Localization block: generator set, B, C, localized relations, transfer
/// verdicts, and a balanced-insertion search result per eligible atom.
Json localization_json(const LocalizationSetup& setup,
                       const std::vector<LocalizedRelation>& relations,
                       const NagataCheck& nagata,
                       const std::vector<ClaimStarResult>& claim_star);

Json survey_json(const SurveyResult& result);

Json equality_json(const EqualityReport& report);
Json polynomial_identity_json(const PolynomialIdentityReport& report);

/// Atom and classification tables as CSV; the only CSV the tool emits.
std::string atoms_csv(const AnalysisResult& result);

/// Canonical rendering: two-space indent plus trailing newline.
std::string render(const Json& document);

} // namespace hfdlab
