#include "hfdlab/analysis.hpp"

#include <algorithm>

namespace hfdlab {

namespace {

// Applies fn to every zero-sum sequence over cs with total length in
// [1, max_length]; stops early when fn returns false.
template <typename Fn>
bool for_each_zero_sum(const ClassSubset& cs, int max_length, Fn&& fn) {
    const std::size_t k = cs.size();
    std::vector<int> mult(k, 0);
    // Odometer over all multiplicity vectors with bounded total length.
    for (;;) {
        std::size_t j = 0;
        int used = 0;
        for (int m : mult) used += m;
        while (j < k && used >= max_length) {
            used -= mult[j];
            mult[j] = 0;
            ++j;
        }
        if (j == k) break;
        ++mult[j];
        ++used;
        if (cs.group().is_zero(cs.content_sum(mult))) {
            if (!fn(ZeroSumSequence{mult})) return false;
        }
    }
    return true;
}

} // namespace

bool is_hfd(const AtomClassification& c) {
    return std::none_of(c.bad.begin(), c.bad.end(), [](bool b) { return b; });
}

bool is_r_chfd(const std::vector<Relation>& relations, int r) {
    if (r < 2) throw InvalidParameterError("congruence modulus must be at least 2");
    return std::all_of(relations.begin(), relations.end(),
                       [r](const Relation& rel) { return rel.r_balanced(r); });
}

std::set<int> distance_witnesses(const std::vector<Relation>& relations) {
    std::set<int> out;
    for (const auto& rel : relations) {
        if (!rel.balanced()) out.insert(rel.distance());
    }
    return out;
}

HfElementCheck hf_element_check(const ZeroSumSequence& s, const AtomTable& t,
                                const AtomClassification& c) {
    if (s.empty()) throw InvalidSequenceError("HF-element check needs a nonempty sequence");
    HfElementCheck out;
    out.is_hf = length_set(s, t).size() == 1;

    std::vector<bool> covered(s.mult.size(), false);
    for (std::size_t a = 0; a < t.size(); ++a) {
        if (c.bad[a]) continue;
        const auto& mult = t.atom(static_cast<int>(a)).mult;
        for (std::size_t i = 0; i < mult.size(); ++i) {
            if (mult[i] > 0) covered[i] = true;
        }
    }
    out.corollary_applies = true;
    for (std::size_t i = 0; i < s.mult.size(); ++i) {
        if (s.mult[i] > 0 && !covered[i]) {
            out.corollary_applies = false;
            break;
        }
    }
    return out;
}

CoverageCheck coverage_check(const ClassSubset& cs, const AtomTable& t,
                             const AtomClassification& c) {
    CoverageCheck out;
    std::vector<bool> covered(cs.size(), false);
    for (std::size_t a = 0; a < t.size(); ++a) {
        if (c.bad[a]) continue;
        const auto& mult = t.atom(static_cast<int>(a)).mult;
        for (std::size_t i = 0; i < mult.size(); ++i) {
            if (mult[i] > 0) covered[i] = true;
        }
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
        (covered[i] ? out.covered_classes : out.uncovered_classes).push_back(cs.classes()[i]);
    }
    out.is_hfd = is_hfd(c);
    out.all_covered = out.uncovered_classes.empty();
    out.equivalence_holds = (out.is_hfd == out.all_covered);
    return out;
}

bool is_factorial(const std::vector<Relation>& relations) { return relations.empty(); }

int default_ohfd_bound(const AtomTable& t) {
    int max_len = 0;
    for (const auto& a : t.atoms()) max_len = std::max(max_len, a.total_length());
    return std::max(8, 2 * max_len);
}

bool is_ohfd(const ClassSubset& cs, const AtomTable& t, int bound) {
    int max_len = 0;
    for (const auto& a : t.atoms()) max_len = std::max(max_len, a.total_length());
    if (bound < 2 * max_len) {
        throw InvalidParameterError("distinct-length scan bound must reach twice the longest atom");
    }
    return for_each_zero_sum(cs, bound, [&](const ZeroSumSequence& s) {
        const auto factorizations = enumerate_factorizations(s, t);
        std::set<int> lengths;
        for (const auto& f : factorizations) lengths.insert(f.length());
        return lengths.size() == factorizations.size();
    });
}

AnalysisResult analyze(const ClassSubset& cs, const AnalysisOptions& options) {
    AnalysisResult result;
    result.cs = cs;
    result.atoms = enumerate_atoms(cs);
    result.relations = irredundant_relations(result.atoms, options.solver);
    result.classification = classify_atoms(result.atoms, result.relations, options.rs);

    AnalysisReport& report = result.report;
    report.is_hfd = is_hfd(result.classification);
    for (int r : options.rs) report.r_chfd[r] = is_r_chfd(result.relations, r);
    report.distance_witnesses = distance_witnesses(result.relations);
    report.coverage = coverage_check(cs, result.atoms, result.classification);
    report.is_factorial = is_factorial(result.relations);
    report.ohfd_bound = options.ohfd_bound > 0 ? options.ohfd_bound
                                               : default_ohfd_bound(result.atoms);
    report.ohfd = is_ohfd(cs, result.atoms, report.ohfd_bound);
    return result;
}

} // namespace hfdlab
