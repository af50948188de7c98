#include "hfdlab/survey.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>

#include "hfdlab/text.hpp"

namespace hfdlab {

namespace {

const std::vector<std::string> kAllChecks = {"kaplansky", "rchfd", "prop4", "nagata",
                                             "ohfd-ufd"};

bool wants(const std::vector<std::string>& checks, const std::string& name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
}

std::string classes_text(const ClassSubset& cs) {
    std::string out = "{";
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i > 0) out += ",";
        out += format_element(cs.classes()[i]);
    }
    return out + "}";
}

// Candidate budget for one full enumeration attempt.  Every instance over
// a group of order <= 6 whose relation set is reachable at all completes
// well below this; the intractable ones trip it in a fraction of a second.
constexpr std::size_t kFullAttemptCap = 50'000;

// Content windows for the escalating certification search.  Over groups of
// order <= 6 every atom that is bad at all has a witness within content 10;
// the last step is margin.
constexpr std::array<int, 3> kWindowLadder = {8, 10, 12};

// m == 0 tests plain imbalance, m >= 2 imbalance modulo m.
bool m_unbalanced(const Relation& rel, int m) {
    const int d = rel.lhs.length() - rel.rhs.length();
    return m == 0 ? d != 0 : d % m != 0;
}

// Exact per-instance evidence, gathered lazily.  The distance gcd settles
// the balanced properties outright.  Atom badness certificates come from
// the full relation set when one enumeration attempt fits the budget, and
// from exact content windows otherwise; a certificate is always final,
// while its absence is final only once the instance is resolved.
struct InstanceContext {
    const ClassSubset& cs;
    AtomTable atoms;
    long long gcd = 0;
    std::size_t lattice_rank = 0;
    std::vector<char> on_support;
    std::optional<std::vector<Relation>> full;
    std::vector<Relation> windowed;
    std::size_t rung = 0;
    bool full_tried = false;
    bool fallback_tried = false;
    std::map<int, std::vector<char>> certified;

    explicit InstanceContext(const ClassSubset& subset)
        : cs(subset), atoms(enumerate_atoms(subset)) {
        on_support.assign(atoms.size(), 0);
        for (const auto& z : kernel_lattice_basis(content_matrix(atoms))) {
            ++lattice_rank;
            long long d = 0;
            for (std::size_t j = 0; j < atoms.size(); ++j) {
                d += z[j];
                if (z[j] != 0) on_support[j] = 1;
            }
            gcd = std::gcd(gcd, d);
        }
    }

    // Whether every relation distance vanishes (m == 0) or is divisible by
    // m; exact, with no enumeration behind it.
    bool property(int m) const { return m == 0 ? gcd == 0 : gcd % m == 0; }

    const std::vector<Relation>& best() const { return full ? *full : windowed; }

    std::vector<char>& flags(int m) {
        auto [it, inserted] = certified.try_emplace(m);
        if (inserted) {
            it->second.assign(atoms.size(), 0);
            fold(it->second, m);
        }
        return it->second;
    }

    void fold(std::vector<char>& f, int m) const {
        for (const auto& rel : best()) {
            if (!m_unbalanced(rel, m)) continue;
            for (std::size_t j : relation_support(rel)) f[j] = 1;
        }
    }

    // One more step of evidence; false once every source is spent.  The
    // final fallback honours the caller's cap and lets ResourceCapError
    // propagate: an undecidable instance must not decay into a wrong
    // answer.
    bool extend(const SolverOptions& solver) {
        if (full) return false;
        if (!full_tried) {
            full_tried = true;
            SolverOptions attempt = solver;
            attempt.candidate_cap = std::min(solver.candidate_cap, kFullAttemptCap);
            try {
                full = irredundant_relations(atoms, attempt);
            } catch (const ResourceCapError&) {
            }
        } else if (rung < kWindowLadder.size()) {
            windowed = irredundant_relations_within(atoms, kWindowLadder[rung++], solver);
        } else if (!fallback_tried && solver.candidate_cap > kFullAttemptCap) {
            fallback_tried = true;
            full = irredundant_relations(atoms, solver);
        } else {
            return false;
        }
        for (auto& [m, f] : certified) fold(f, m);
        return true;
    }

    // Final when the certificates can no longer change: atoms outside the
    // kernel support never appear in any relation, so once every atom on
    // the support is certified the classification is complete.
    bool resolved(int m) {
        if (full || property(m)) return true;
        const auto& f = flags(m);
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            if (on_support[j] && !f[j]) return false;
        }
        return true;
    }

    std::string describe() const {
        std::string moduli = "(";
        for (std::size_t i = 0; i < cs.group().moduli().size(); ++i) {
            if (i > 0) moduli += ",";
            moduli += std::to_string(cs.group().moduli()[i]);
        }
        return classes_text(cs) + " over the group with moduli " + moduli + ")";
    }
};

bool class_fully_bad(InstanceContext& ctx, int m, std::size_t i) {
    const auto& f = ctx.flags(m);
    for (std::size_t a = 0; a < ctx.atoms.size(); ++a) {
        if (ctx.atoms.atom(static_cast<int>(a)).mult[i] > 0 && !f[a]) return false;
    }
    return true;
}

// Exact test of "every class lies in the support of an m-good atom".  A
// fully bad class settles it negatively at any point; the positive answer
// needs the instance resolved first.
bool covered_by_m_good(InstanceContext& ctx, int m, const SolverOptions& solver) {
    for (std::size_t i = 0; i < ctx.cs.size(); ++i) {
        bool in_some_atom = false;
        for (std::size_t a = 0; a < ctx.atoms.size() && !in_some_atom; ++a) {
            in_some_atom = ctx.atoms.atom(static_cast<int>(a)).mult[i] > 0;
        }
        if (!in_some_atom) return false;
    }
    if (ctx.property(m)) return true;
    while (true) {
        for (std::size_t i = 0; i < ctx.cs.size(); ++i) {
            if (class_fully_bad(ctx, m, i)) return false;
        }
        if (ctx.resolved(m)) return true;
        if (!ctx.extend(solver)) {
            throw ResourceCapError("could not resolve atom badness for " + ctx.describe());
        }
    }
}

} // namespace

std::vector<FiniteAbelianGroup> survey_groups(int max_order) {
    std::vector<FiniteAbelianGroup> groups;
    groups.emplace_back(std::vector<int>{});
    for (int n = 2; n <= max_order; ++n) groups.emplace_back(std::vector<int>{n});
    groups.emplace_back(std::vector<int>{2, 2});
    return groups;
}

SurveyResult run_survey(const SurveyOptions& options) {
    if (options.max_order < 1 || options.max_order > kSurveyCeiling) {
        throw InvalidParameterError("max order must lie in [1, " +
                                    std::to_string(kSurveyCeiling) + "]");
    }
    std::vector<std::string> checks = options.checks.empty() ? kAllChecks : options.checks;
    for (const auto& c : checks) {
        if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end()) {
            throw InvalidParameterError("unknown check '" + c + "'");
        }
    }
    for (int r : options.rs) {
        if (r < 2) throw InvalidParameterError("congruence modulus must be at least 2");
    }

    SurveyResult result;
    result.max_order = options.max_order;
    result.checks = checks;
    result.rs = options.rs;

    for (const auto& group : survey_groups(options.max_order)) {
        const auto elements = group.enumerate_elements();
        const std::size_t n = elements.size();
        for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
            std::vector<GroupElement> classes;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1UL << i)) classes.push_back(elements[i]);
            }
            const ClassSubset cs(group, classes);
            InstanceContext ctx(cs);
            ++result.instances;

            auto record = [&](const std::string& check, std::string detail, int r = 0,
                              std::vector<int> generators = {}) {
                SurveyCounterexample ce;
                ce.check = check;
                ce.moduli = group.moduli();
                ce.classes = classes;
                ce.generators = std::move(generators);
                ce.r = r;
                ce.detail = std::move(detail);
                result.counterexamples.push_back(std::move(ce));
            };

            if (wants(checks, "kaplansky")) {
                const bool hfd = ctx.property(0);
                const bool covered = covered_by_m_good(ctx, 0, options.solver);
                if (hfd != covered) {
                    record("kaplansky",
                           (hfd ? std::string("half-factorial") : std::string("not half-factorial")) +
                               " with coverage " + (covered ? "complete" : "incomplete"));
                }
            }
            if (wants(checks, "rchfd")) {
                for (int r : options.rs) {
                    const bool congruent = ctx.property(r);
                    const bool covered = covered_by_m_good(ctx, r, options.solver);
                    if (congruent != covered) {
                        record("rchfd",
                               std::string(congruent ? "congruent lengths" : "incongruent lengths") +
                                   " with coverage " + (covered ? "complete" : "incomplete"),
                               r);
                    }
                }
            }
            if (wants(checks, "prop4")) {
                if (group.order() <= 2 && !ctx.property(0)) {
                    record("prop4", "group of order <= 2 but not half-factorial");
                }
                if (group.order() >= 3 && classes.size() == n) {
                    while (true) {
                        bool all_bad = true;
                        const auto& f = ctx.flags(0);
                        for (std::size_t a = 0; a < ctx.atoms.size() && all_bad; ++a) {
                            all_bad = ctx.atoms.atom(static_cast<int>(a)).total_length() == 1 ||
                                      f[a];
                        }
                        if (all_bad || ctx.resolved(0)) break;
                        if (!ctx.extend(options.solver)) {
                            throw ResourceCapError("could not resolve atom badness for " +
                                                   ctx.describe());
                        }
                    }
                    const auto& f = ctx.flags(0);
                    for (std::size_t a = 0; a < ctx.atoms.size(); ++a) {
                        const auto& atom = ctx.atoms.atom(static_cast<int>(a));
                        if (atom.total_length() == 1) continue; // the (0) atom is prime
                        if (!f[a]) {
                            record("prop4", "full class set but good atom " +
                                                format_sequence(atom, cs));
                        }
                    }
                }
            }
            if (wants(checks, "nagata")) {
                while (!ctx.resolved(0)) {
                    if (!ctx.extend(options.solver)) {
                        throw ResourceCapError("could not resolve the good atoms of " +
                                               ctx.describe());
                    }
                }
                // Resolved, so this classification is the exact one even
                // when derived from a window.
                const auto cls = classify_atoms(ctx.atoms, ctx.best(), {});
                for (const auto& generators : divisor_closed_good_subsets(ctx.atoms, cls)) {
                    const auto setup = make_localization(cs, ctx.atoms, ctx.best(), cls,
                                                         generators, options.solver);
                    const auto check = nagata_instance_check(setup, options.rs);
                    if (!check.hfd.consistent) {
                        record("nagata", "localization half-factorial but base is not", 0,
                               generators);
                    }
                    for (const auto& [r, tc] : check.r_chfd) {
                        if (!tc.consistent) {
                            record("nagata",
                                   "localization lengths congruent but base lengths are not", r,
                                   generators);
                        }
                    }
                }
            }
            if (wants(checks, "ohfd-ufd")) {
                const bool ohfd = is_ohfd(cs, ctx.atoms, default_ohfd_bound(ctx.atoms));
                if (ohfd && ctx.lattice_rank != 0) {
                    record("ohfd-ufd", "distinct lengths verified to bound " +
                                           std::to_string(default_ohfd_bound(ctx.atoms)) +
                                           " but factorizations are not unique at " +
                                           classes_text(cs));
                }
            }
        }
    }
    return result;
}

} // namespace hfdlab