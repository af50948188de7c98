#pragma once

#include <map>
#include <set>
#include <vector>

#include "hfdlab/relations.hpp"

namespace hfdlab {

/// Class-coverage side of the half-factoriality criterion: a class is
/// covered when it lies in the support of a good atom.  In the Dedekind
/// reading every height-one prime in class g divides exactly the sequences
/// whose support contains g, so "every nonzero prime contains a good atom"
/// becomes "every class is covered".
struct CoverageCheck {
    std::vector<GroupElement> covered_classes;
    std::vector<GroupElement> uncovered_classes;
    bool is_hfd = false;
    bool all_covered = false;
    bool equivalence_holds = false;
};

/// Verdict pair for a single sequence: equal factorization lengths, and
/// whether the coverage criterion already forces that.
struct HfElementCheck {
    bool is_hf = false;
    bool corollary_applies = false;
};

/// Aggregated verdicts for one (group, class subset) instance.
struct AnalysisReport {
    bool is_hfd = false;
    std::map<int, bool> r_chfd;
    /// Length gaps |n - m| of the unbalanced irredundant relations; empty
    /// exactly when the monoid is half-factorial.
    std::set<int> distance_witnesses;
    CoverageCheck coverage;
    bool is_factorial = false;
    bool ohfd = false;
    /// Content-length ceiling the distinct-length scan ran to.
    int ohfd_bound = 0;
};

/// True iff no atom is bad.
bool is_hfd(const AtomClassification& c);

/// True iff every irredundant relation has side lengths congruent mod r,
/// equivalently every atom is r-good.  Throws InvalidParameterError for
/// r < 2.
bool is_r_chfd(const std::vector<Relation>& relations, int r);

/// Length gaps of the unbalanced relations.
std::set<int> distance_witnesses(const std::vector<Relation>& relations);

/// Checks one nonempty zero-sum sequence: is_hf iff all its factorizations
/// share one length; corollary_applies iff every class in its support is
/// covered by a good atom.  The second is expected to force the first.
HfElementCheck hf_element_check(const ZeroSumSequence& s, const AtomTable& t,
                                const AtomClassification& c);

/// Both sides of the coverage criterion: half-factorial iff every class of
/// the subset lies in the support of a good atom.
CoverageCheck coverage_check(const ClassSubset& cs, const AtomTable& t,
                             const AtomClassification& c);

/// True iff there is no nontrivial irredundant relation, so factorizations
/// are unique.
bool is_factorial(const std::vector<Relation>& relations);

/// Bounded scan for the other-half-factorial property: true iff every
/// zero-sum sequence of total length <= bound has pairwise distinct
/// factorization lengths.  A verification to the stated bound, not a proof.
/// Requires bound >= 2 * (max atom length), else InvalidParameterError.
bool is_ohfd(const ClassSubset& cs, const AtomTable& t, int bound);

/// Scan ceiling analyze() uses when none is given: max(8, 2 * max atom
/// length), the smallest bound is_ohfd accepts that still covers every
/// two-atom product.
int default_ohfd_bound(const AtomTable& t);

struct AnalysisOptions {
    std::vector<int> rs;
    int ohfd_bound = 0; // 0 means default_ohfd_bound
    SolverOptions solver;
};

/// Full pipeline output for one instance.
struct AnalysisResult {
    ClassSubset cs;
    AtomTable atoms;
    std::vector<Relation> relations;
    AtomClassification classification;
    AnalysisReport report;
};

/// Runs the whole pipeline: atoms, irredundant relations, classification,
/// and every report verdict.
AnalysisResult analyze(const ClassSubset& cs, const AnalysisOptions& options = {});

} // namespace hfdlab
