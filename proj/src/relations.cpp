#include "hfdlab/relations.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

namespace hfdlab {

namespace {

void check_factorization(const AtomTable& atoms, const FactorizationVector& f,
                         const char* side) {
    if (f.counts.size() != atoms.size()) {
        throw InvalidParameterError(std::string(side) +
                                    " side does not match the atom table size");
    }
    for (int c : f.counts) {
        if (c < 0) throw InvalidParameterError(std::string(side) + " side has a negative count");
    }
}

void check_relation(const AtomTable& atoms, const Relation& rel) {
    check_factorization(atoms, rel.lhs, "left");
    check_factorization(atoms, rel.rhs, "right");
    if (factorization_content(rel.lhs, atoms) != factorization_content(rel.rhs, atoms)) {
        throw InvalidParameterError("relation sides have different class content");
    }
    if (rel.lhs == rel.rhs) {
        throw InvalidParameterError("relation sides must differ");
    }
}

bool oriented(const FactorizationVector& a, const FactorizationVector& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.counts <= b.counts;
}

bool relation_order(const Relation& a, const Relation& b) {
    if (a.lhs.length() != b.lhs.length()) return a.lhs.length() < b.lhs.length();
    if (a.rhs.length() != b.rhs.length()) return a.rhs.length() < b.rhs.length();
    if (a.lhs.counts != b.lhs.counts) return a.lhs.counts < b.lhs.counts;
    return a.rhs.counts < b.rhs.counts;
}

DiophantineSystem pair_system(const AtomTable& atoms) {
    const auto matrix = content_matrix(atoms);
    const std::size_t k = atoms.size();
    DiophantineSystem system;
    system.rows.reserve(matrix.size());
    for (const auto& row : matrix) {
        std::vector<long long> full(2 * k, 0);
        for (std::size_t j = 0; j < k; ++j) {
            full[j] = row[j];
            full[k + j] = -row[j];
        }
        system.rows.push_back(std::move(full));
    }
    return system;
}

} // namespace

std::vector<std::vector<long long>> content_matrix(const AtomTable& atoms) {
    const std::size_t classes = atoms.class_subset().size();
    std::vector<std::vector<long long>> matrix(classes, std::vector<long long>(atoms.size(), 0));
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        const auto& mult = atoms.atom(j).mult;
        for (std::size_t i = 0; i < classes; ++i) matrix[i][j] = mult[i];
    }
    return matrix;
}

bool Relation::r_balanced(int r) const {
    if (r < 2) throw InvalidParameterError("congruence modulus must be at least 2");
    return (lhs.length() - rhs.length()) % r == 0;
}

int Relation::distance() const { return std::abs(lhs.length() - rhs.length()); }

Relation make_relation(const AtomTable& atoms, FactorizationVector lhs, FactorizationVector rhs) {
    Relation rel{std::move(lhs), std::move(rhs)};
    check_relation(atoms, rel);
    if (!oriented(rel.lhs, rel.rhs)) std::swap(rel.lhs, rel.rhs);
    return rel;
}

std::vector<std::size_t> relation_support(const Relation& rel) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < rel.lhs.counts.size(); ++j) {
        if (rel.lhs.counts[j] > 0 || rel.rhs.counts[j] > 0) support.push_back(j);
    }
    return support;
}

int relation_content_length(const AtomTable& atoms, const Relation& rel) {
    check_factorization(atoms, rel.lhs, "left");
    int total = 0;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        total += rel.lhs.counts[j] * atoms.atom(j).total_length();
    }
    return total;
}

namespace {

std::vector<Relation> sign_split_relations(std::size_t k,
                                           const std::vector<std::vector<long long>>& kernel) {
    std::vector<Relation> relations;
    relations.reserve(kernel.size());
    for (const auto& z : kernel) {
        FactorizationVector x;
        FactorizationVector y;
        x.counts.assign(k, 0);
        y.counts.assign(k, 0);
        for (std::size_t j = 0; j < k; ++j) {
            if (z[j] > 0) x.counts[j] = static_cast<int>(z[j]);
            if (z[j] < 0) y.counts[j] = static_cast<int>(-z[j]);
        }
        Relation rel{std::move(x), std::move(y)};
        if (!oriented(rel.lhs, rel.rhs)) std::swap(rel.lhs, rel.rhs);
        relations.push_back(std::move(rel));
    }
    std::sort(relations.begin(), relations.end(), relation_order);
    relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
    return relations;
}

} // namespace

std::vector<Relation> irredundant_relations(const AtomTable& atoms,
                                            const SolverOptions& options) {
    if (atoms.size() == 0) return {};
    // An indecomposable pair (x, y) with x != y has disjoint atom supports
    // (a shared atom splits off a trivial pair), so the pairs are exactly
    // the sign splits z = x - y of the conformally minimal kernel vectors
    // of the content matrix.
    return sign_split_relations(atoms.size(), graver_basis(content_matrix(atoms), options));
}

std::vector<Relation> irredundant_relations_within(const AtomTable& atoms, int max_content,
                                                   const SolverOptions& options) {
    if (max_content < 0) throw InvalidParameterError("content window must be nonnegative");
    const std::size_t k = atoms.size();
    if (k == 0) return {};
    // The minimal solutions of the doubled system M x = M y are the
    // same-atom pairs plus the sign splits of the irredundant relations.
    // Each side of a solution weighs its content length under the atom
    // lengths, so budgeting both sides enumerates the window exactly.
    DiophantineSystem system = pair_system(atoms);
    DiophantineSystem::WeightBudget lhs_budget;
    DiophantineSystem::WeightBudget rhs_budget;
    lhs_budget.weights.assign(2 * k, 0);
    rhs_budget.weights.assign(2 * k, 0);
    lhs_budget.bound = max_content;
    rhs_budget.bound = max_content;
    for (std::size_t j = 0; j < k; ++j) {
        lhs_budget.weights[j] = atoms.atom(j).total_length();
        rhs_budget.weights[k + j] = lhs_budget.weights[j];
    }
    system.budgets.push_back(std::move(lhs_budget));
    system.budgets.push_back(std::move(rhs_budget));

    std::vector<Relation> relations;
    for (const auto& sol : hilbert_basis(system, options)) {
        FactorizationVector x;
        FactorizationVector y;
        x.counts.assign(k, 0);
        y.counts.assign(k, 0);
        for (std::size_t j = 0; j < k; ++j) {
            x.counts[j] = static_cast<int>(sol[j]);
            y.counts[j] = static_cast<int>(sol[k + j]);
        }
        if (x == y) continue;
        Relation rel{std::move(x), std::move(y)};
        if (!oriented(rel.lhs, rel.rhs)) std::swap(rel.lhs, rel.rhs);
        relations.push_back(std::move(rel));
    }
    std::sort(relations.begin(), relations.end(), relation_order);
    relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
    return relations;
}

std::size_t relation_lattice_rank(const AtomTable& atoms) {
    if (atoms.size() == 0) return 0;
    return kernel_lattice_basis(content_matrix(atoms)).size();
}

long long relation_distance_gcd(const AtomTable& atoms) {
    if (atoms.size() == 0) return 0;
    // The signed length difference of a relation is linear in its kernel
    // vector, and the irredundant relations generate the kernel lattice, so
    // the gcd over all of them equals the gcd over any lattice basis.
    long long g = 0;
    for (const auto& z : kernel_lattice_basis(content_matrix(atoms))) {
        long long total = 0;
        for (long long a : z) total += a;
        g = std::gcd(g, total);
    }
    return g;
}

bool is_irredundant(const AtomTable& atoms, const Relation& rel, const SolverOptions& options) {
    check_relation(atoms, rel);
    const std::size_t k = atoms.size();
    DiophantineSystem system = pair_system(atoms);
    std::vector<long long> bounds(2 * k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        bounds[j] = rel.lhs.counts[j];
        bounds[k + j] = rel.rhs.counts[j];
    }
    system.upper_bounds = std::move(bounds);
    std::vector<long long> as_vector(2 * k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        as_vector[j] = rel.lhs.counts[j];
        as_vector[k + j] = rel.rhs.counts[j];
    }
    const auto minimal = hilbert_basis(system, options);
    return std::find(minimal.begin(), minimal.end(), as_vector) != minimal.end();
}

std::vector<std::size_t> AtomClassification::good_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bad.size(); ++i) {
        if (!bad[i]) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> AtomClassification::bad_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bad.size(); ++i) {
        if (bad[i]) out.push_back(i);
    }
    return out;
}

AtomClassification classify_atoms(const AtomTable& atoms, const std::vector<Relation>& relations,
                                  const std::vector<int>& rs) {
    for (int r : rs) {
        if (r < 2) throw InvalidParameterError("congruence modulus must be at least 2");
    }
    for (const auto& rel : relations) {
        check_factorization(atoms, rel.lhs, "left");
        check_factorization(atoms, rel.rhs, "right");
    }

    AtomClassification result;
    result.bad.assign(atoms.size(), false);
    result.witness.assign(atoms.size(), -1);
    for (int r : rs) {
        result.r_bad[r].assign(atoms.size(), false);
        result.r_witness[r].assign(atoms.size(), -1);
    }

    for (std::size_t ri = 0; ri < relations.size(); ++ri) {
        const auto& rel = relations[ri];
        const auto support = relation_support(rel);
        if (!rel.balanced()) {
            for (std::size_t j : support) {
                if (!result.bad[j]) {
                    result.bad[j] = true;
                    result.witness[j] = static_cast<int>(ri);
                }
            }
        }
        for (int r : rs) {
            if (rel.r_balanced(r)) continue;
            auto& flags = result.r_bad[r];
            auto& wit = result.r_witness[r];
            for (std::size_t j : support) {
                if (!flags[j]) {
                    flags[j] = true;
                    wit[j] = static_cast<int>(ri);
                }
            }
        }
    }
    return result;
}

} // namespace hfdlab
