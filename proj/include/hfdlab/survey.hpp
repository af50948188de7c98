#pragma once

#include <string>
#include <vector>

#include "hfdlab/localization.hpp"

namespace hfdlab {

/// Largest max_order run_survey accepts.
inline constexpr int kSurveyCeiling = 8;

struct SurveyOptions {
    int max_order = 6;
    /// Any of "kaplansky", "rchfd", "prop4", "nagata", "ohfd-ufd";
    /// empty selects all five.
    std::vector<std::string> checks;
    std::vector<int> rs = {2, 3, 4};
    SolverOptions solver;
};

struct SurveyCounterexample {
    std::string check;
    std::vector<int> moduli;
    std::vector<GroupElement> classes;
    std::vector<int> generators;
    int r = 0;
    std::string detail;
};

struct SurveyResult {
    int max_order = 0;
    std::vector<std::string> checks;
    std::vector<int> rs;
    long long instances = 0;
    std::vector<SurveyCounterexample> counterexamples;
};

/// The groups a survey walks: the trivial group, cyclic groups of orders
/// 2..max_order, then Z/2 x Z/2 (rank-2 behaviour cyclic scans miss).
std::vector<FiniteAbelianGroup> survey_groups(int max_order);

/// Runs the selected checks over every class subset of every survey group,
/// subsets in ascending bitmask order over the lexicographic element list.
/// Deterministic.  Throws InvalidParameterError for an unknown check name,
/// r < 2, or max_order outside [1, kSurveyCeiling].
SurveyResult run_survey(const SurveyOptions& options);

} // namespace hfdlab
