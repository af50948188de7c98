#include "hfdlab/localization.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>

namespace hfdlab {

namespace {

constexpr long long kNoBound = std::numeric_limits<long long>::max();

bool divides(const std::vector<int>& part, const std::vector<int>& whole) {
    for (std::size_t i = 0; i < part.size(); ++i) {
        if (part[i] > whole[i]) return false;
    }
    return true;
}

// Contents of all nonempty products of the generators with total length at
// most budget, deduplicated.
std::set<std::vector<int>> generator_products(const AtomTable& atoms,
                                              const std::vector<int>& generators, int budget) {
    std::set<std::vector<int>> contents;
    std::vector<int> current(atoms.class_subset().size(), 0);
    auto rec = [&](auto&& self, std::size_t gi, int used) -> void {
        if (used > 0) contents.insert(current);
        for (std::size_t j = gi; j < generators.size(); ++j) {
            const auto& atom = atoms.atom(generators[j]);
            const int len = atom.total_length();
            if (used + len > budget) continue;
            for (std::size_t i = 0; i < current.size(); ++i) current[i] += atom.mult[i];
            self(self, j, used + len);
            for (std::size_t i = 0; i < current.size(); ++i) current[i] -= atom.mult[i];
        }
    };
    rec(rec, 0, 0);
    return contents;
}

// Feasibility of content(a) + M_B s = M_B t over the naturals: the atom
// becomes a unit once S is inverted.
bool unit_mod_s(const AtomTable& atoms, const std::vector<int>& B, int a,
                const SolverOptions& options) {
    const std::size_t classes = atoms.class_subset().size();
    DiophantineSystem system;
    std::vector<long long> target(classes);
    for (std::size_t i = 0; i < classes; ++i) {
        std::vector<long long> row;
        row.reserve(2 * B.size());
        for (int b : B) row.push_back(atoms.atom(b).mult[i]);
        for (int b : B) row.push_back(-atoms.atom(b).mult[i]);
        system.rows.push_back(std::move(row));
        target[i] = atoms.atom(a).mult[i];
    }
    return bounded_solution(system, target, options).has_value();
}

// Feasibility of content(a) + M_B u = M_N y + M_B w with y spanning the
// non-inverted atoms and sum(y) >= 2: the atom splits once S is inverted.
// Decided from one Hilbert basis of the homogenized system: either some
// minimal inhomogeneous solution already has sum(y) >= 2, or the system is
// feasible and a homogeneous minimal solution can pump sum(y) up.
bool reducible_mod_s(const AtomTable& atoms, const std::vector<int>& B,
                     const std::vector<int>& N, int a, const SolverOptions& options) {
    const std::size_t classes = atoms.class_subset().size();
    const std::size_t n = N.size() + 2 * B.size() + 1;
    DiophantineSystem system;
    for (std::size_t i = 0; i < classes; ++i) {
        std::vector<long long> row;
        row.reserve(n);
        for (int c : N) row.push_back(atoms.atom(c).mult[i]);
        for (int b : B) row.push_back(atoms.atom(b).mult[i]);
        for (int b : B) row.push_back(-atoms.atom(b).mult[i]);
        row.push_back(-atoms.atom(a).mult[i]);
        system.rows.push_back(std::move(row));
    }
    std::vector<long long> bounds(n, kNoBound);
    bounds.back() = 1;
    system.upper_bounds = std::move(bounds);

    bool feasible = false;
    bool direct = false;
    bool pump = false;
    for (const auto& sol : hilbert_basis(system, options)) {
        long long sum_y = 0;
        for (std::size_t j = 0; j < N.size(); ++j) sum_y += sol[j];
        if (sol.back() == 1) {
            feasible = true;
            if (sum_y >= 2) direct = true;
        } else if (sum_y >= 1) {
            pump = true;
        }
    }
    return direct || (feasible && pump);
}

} // namespace

bool is_divisor_closed(const AtomTable& atoms, const std::vector<int>& generators) {
    const int budget = 2 * static_cast<int>(atoms.class_subset().group().order());
    const std::set<int> gen_set(generators.begin(), generators.end());
    for (const auto& content : generator_products(atoms, generators, budget)) {
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (gen_set.count(static_cast<int>(a))) continue;
            if (divides(atoms.atom(static_cast<int>(a)).mult, content)) return false;
        }
    }
    return true;
}

LocalizationSetup make_localization(const ClassSubset& cs, const AtomTable& atoms,
                                    const std::vector<Relation>& base_relations,
                                    const AtomClassification& classification,
                                    std::vector<int> s_generators,
                                    const SolverOptions& options) {
    if (classification.size() != atoms.size()) {
        throw LocalizationError("classification does not match the atom table");
    }
    std::sort(s_generators.begin(), s_generators.end());
    for (std::size_t j = 0; j < s_generators.size(); ++j) {
        const int g = s_generators[j];
        if (g < 0 || static_cast<std::size_t>(g) >= atoms.size()) {
            throw LocalizationError("generator index out of range");
        }
        if (j > 0 && s_generators[j - 1] == g) {
            throw LocalizationError("duplicate generator");
        }
        if (classification.bad[g]) {
            throw LocalizationError("generator is a bad atom");
        }
    }
    if (!is_divisor_closed(atoms, s_generators)) {
        throw LocalizationError("generator set is not divisor-closed within the checked bound");
    }

    LocalizationSetup setup;
    setup.cs = cs;
    setup.atoms = atoms;
    setup.base_relations = base_relations;
    setup.classification = classification;
    setup.s_generators = s_generators;
    setup.B = s_generators;

    std::vector<int> N;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        if (!std::binary_search(setup.B.begin(), setup.B.end(), static_cast<int>(a))) {
            N.push_back(static_cast<int>(a));
        }
    }
    for (int a : N) {
        if (unit_mod_s(atoms, setup.B, a, options)) continue;
        if (reducible_mod_s(atoms, setup.B, N, a, options)) continue;
        setup.C.push_back(a);
    }
    return setup;
}

bool LocalizedRelation::r_balanced(int r) const {
    if (r < 2) throw InvalidParameterError("congruence modulus must be at least 2");
    return (lhs_length - rhs_length) % r == 0;
}

int LocalizedRelation::distance() const { return std::abs(lhs_length - rhs_length); }

namespace {

// Rows of the doubled localized system M_C x + M_B u = M_C y + M_B v, with
// columns ordered [x | u | y | v].
std::vector<std::vector<long long>> doubled_localized_rows(const LocalizationSetup& setup) {
    const auto& atoms = setup.atoms;
    const std::size_t classes = setup.cs.size();
    std::vector<std::vector<long long>> rows;
    rows.reserve(classes);
    for (std::size_t i = 0; i < classes; ++i) {
        std::vector<long long> row;
        row.reserve(2 * (setup.C.size() + setup.B.size()));
        for (int c : setup.C) row.push_back(atoms.atom(c).mult[i]);
        for (int b : setup.B) row.push_back(atoms.atom(b).mult[i]);
        for (int c : setup.C) row.push_back(-atoms.atom(c).mult[i]);
        for (int b : setup.B) row.push_back(-atoms.atom(b).mult[i]);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<LocalizedRelation> localized_relations(const LocalizationSetup& setup,
                                                   const SolverOptions& options) {
    const auto& atoms = setup.atoms;
    const std::size_t nc = setup.C.size();
    const std::size_t nb = setup.B.size();
    const std::size_t half = nc + nb;

    DiophantineSystem system;
    system.rows = doubled_localized_rows(setup);

    std::vector<LocalizedRelation> out;
    if (half == 0) return out;
    for (const auto& sol : hilbert_basis(system, options)) {
        LocalizedRelation rel;
        rel.lhs.counts.assign(atoms.size(), 0);
        rel.rhs.counts.assign(atoms.size(), 0);
        for (std::size_t j = 0; j < nc; ++j) {
            rel.lhs.counts[setup.C[j]] = static_cast<int>(sol[j]);
            rel.rhs.counts[setup.C[j]] = static_cast<int>(sol[half + j]);
            rel.lhs_length += static_cast<int>(sol[j]);
            rel.rhs_length += static_cast<int>(sol[half + j]);
        }
        for (std::size_t j = 0; j < nb; ++j) {
            rel.lhs.counts[setup.B[j]] = static_cast<int>(sol[nc + j]);
            rel.rhs.counts[setup.B[j]] = static_cast<int>(sol[half + nc + j]);
        }
        if (rel.lhs == rel.rhs) continue;
        if (std::tie(rel.rhs_length, rel.rhs.counts) < std::tie(rel.lhs_length, rel.lhs.counts)) {
            std::swap(rel.lhs, rel.rhs);
            std::swap(rel.lhs_length, rel.rhs_length);
        }
        out.push_back(std::move(rel));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> eligible_claim_star_atoms(const LocalizationSetup& setup) {
    std::vector<int> out;
    for (std::size_t a = 0; a < setup.atoms.size(); ++a) {
        const int idx = static_cast<int>(a);
        if (std::binary_search(setup.B.begin(), setup.B.end(), idx)) continue;
        if (std::find(setup.C.begin(), setup.C.end(), idx) != setup.C.end()) continue;
        out.push_back(idx);
    }
    return out;
}

ClaimStarResult claim_star_witness(const LocalizationSetup& setup, int atom_idx, int bound,
                                   const SolverOptions& options) {
    const auto& atoms = setup.atoms;
    if (atom_idx < 0 || static_cast<std::size_t>(atom_idx) >= atoms.size()) {
        throw LocalizationError("atom index out of range");
    }
    if (std::binary_search(setup.B.begin(), setup.B.end(), atom_idx) ||
        std::find(setup.C.begin(), setup.C.end(), atom_idx) != setup.C.end()) {
        throw LocalizationError("balanced-insertion search needs an atom outside B and C");
    }

    ClaimStarResult result;
    result.atom = atom_idx;
    result.bound = bound > 0 ? bound
                             : 4 * static_cast<int>(setup.cs.group().order());

    std::vector<int> mixed = setup.B;
    mixed.insert(mixed.end(), setup.C.begin(), setup.C.end());
    std::sort(mixed.begin(), mixed.end());

    const std::size_t classes = setup.cs.size();
    const std::size_t nm = mixed.size();
    const std::size_t nb = setup.B.size();
    const int g_len = atoms.atom(atom_idx).total_length();
    const long long budget = result.bound - g_len;
    if (budget < 0) {
        result.diagnostic = "atom content alone exceeds the search bound";
        return result;
    }

    // Variables: q over mixed, p over B, one slack for the length budget.
    DiophantineSystem system;
    std::vector<long long> target;
    for (std::size_t i = 0; i < classes; ++i) {
        std::vector<long long> row;
        row.reserve(nm + nb + 1);
        for (int f : mixed) row.push_back(atoms.atom(f).mult[i]);
        for (int b : setup.B) row.push_back(-atoms.atom(b).mult[i]);
        row.push_back(0);
        system.rows.push_back(std::move(row));
        target.push_back(atoms.atom(atom_idx).mult[i]);
    }
    {
        // One more factor on the right than inserted on the left.
        std::vector<long long> row(nm + nb + 1, 0);
        for (std::size_t j = 0; j < nm; ++j) row[j] = 1;
        for (std::size_t j = 0; j < nb; ++j) row[nm + j] = -1;
        system.rows.push_back(std::move(row));
        target.push_back(1);
    }
    {
        // Left content length capped by the bound, via a slack variable.
        std::vector<long long> row(nm + nb + 1, 0);
        for (std::size_t j = 0; j < nb; ++j) {
            row[nm + j] = atoms.atom(setup.B[j]).total_length();
        }
        row[nm + nb] = 1;
        system.rows.push_back(std::move(row));
        target.push_back(budget);
    }
    std::vector<long long> bounds;
    for (int f : mixed) bounds.push_back(result.bound / atoms.atom(f).total_length());
    for (int b : setup.B) bounds.push_back(budget / atoms.atom(b).total_length());
    bounds.push_back(budget);
    system.upper_bounds = std::move(bounds);

    const auto sol = bounded_solution(system, target, options);
    if (!sol) {
        result.diagnostic = "no balanced insertion with left content length <= " +
                            std::to_string(result.bound);
        return result;
    }
    ClaimStarWitness witness;
    witness.atom = atom_idx;
    for (std::size_t j = 0; j < nb; ++j) {
        for (long long k = 0; k < (*sol)[nm + j]; ++k) witness.s_factors.push_back(setup.B[j]);
    }
    for (std::size_t j = 0; j < nm; ++j) {
        for (long long k = 0; k < (*sol)[j]; ++k) witness.mixed_factors.push_back(mixed[j]);
    }
    result.witness = std::move(witness);
    return result;
}

long long localized_distance_gcd(const LocalizationSetup& setup) {
    const std::size_t nc = setup.C.size();
    const std::size_t half = nc + setup.B.size();
    if (half == 0) return 0;
    // The C-length difference is linear on the kernel of the doubled
    // system, and the localized relations generate that lattice (any kernel
    // vector becomes a nonnegative solution after adding trivial same-atom
    // pairs, which are balanced), so the gcd over all of them equals the
    // gcd over a lattice basis.
    long long g = 0;
    for (const auto& z : kernel_lattice_basis(doubled_localized_rows(setup))) {
        long long d = 0;
        for (std::size_t j = 0; j < nc; ++j) d += z[j] - z[half + j];
        g = std::gcd(g, d);
    }
    return g;
}

NagataCheck nagata_instance_check(const LocalizationSetup& setup, const std::vector<int>& rs) {
    for (int r : rs) {
        if (r < 2) throw InvalidParameterError("congruence modulus must be at least 2");
    }
    const long long localized_g = localized_distance_gcd(setup);
    const long long base_g = relation_distance_gcd(setup.atoms);

    NagataCheck check;
    check.hfd.localized = localized_g == 0;
    check.hfd.base = base_g == 0;
    check.hfd.consistent = !check.hfd.localized || check.hfd.base;

    for (int r : rs) {
        TransferCheck tc;
        tc.localized = localized_g % r == 0;
        tc.base = base_g % r == 0;
        tc.consistent = !tc.localized || tc.base;
        check.r_chfd[r] = tc;
    }
    return check;
}

std::vector<std::vector<int>> divisor_closed_good_subsets(const AtomTable& atoms,
                                                          const AtomClassification& c) {
    std::vector<int> good;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        if (!c.bad[a]) good.push_back(static_cast<int>(a));
    }
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 0; mask < (1UL << good.size()); ++mask) {
        std::vector<int> subset;
        for (std::size_t j = 0; j < good.size(); ++j) {
            if (mask & (1UL << j)) subset.push_back(good[j]);
        }
        if (is_divisor_closed(atoms, subset)) out.push_back(std::move(subset));
    }
    return out;
}

} // namespace hfdlab
