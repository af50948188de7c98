#include "hfdlab/blockmonoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hfdlab {

namespace {

std::string mult_to_string(const std::vector<int>& mult) {
    std::string s = "[";
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mult[i]);
    }
    return s + "]";
}

} // namespace

ClassSubset::ClassSubset(FiniteAbelianGroup group, std::vector<GroupElement> classes)
    : group_(std::move(group)), classes_(std::move(classes)) {
    for (const auto& c : classes_) {
        if (c.size() != group_.rank()) {
            throw IncompatibleElementError("class element rank does not match group");
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 0 || c[i] >= group_.moduli()[i]) {
                throw IncompatibleElementError("class element is not in canonical form");
            }
        }
    }
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
}

int ClassSubset::index_of(const GroupElement& g) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), g);
    if (it == classes_.end() || *it != g) return -1;
    return static_cast<int>(it - classes_.begin());
}

GroupElement ClassSubset::content_sum(const std::vector<int>& mult) const {
    GroupElement sum = group_.zero();
    for (std::size_t i = 0; i < mult.size() && i < classes_.size(); ++i) {
        for (int k = 0; k < mult[i]; ++k) {
            sum = group_.add(sum, classes_[i]);
        }
    }
    return sum;
}

int ZeroSumSequence::total_length() const {
    return std::accumulate(mult.begin(), mult.end(), 0);
}

ZeroSumSequence make_sequence(const ClassSubset& cs, std::vector<int> mult) {
    if (mult.size() != cs.size()) {
        throw InvalidSequenceError("multiplicity vector has " + std::to_string(mult.size()) +
                                   " entries, class subset has " + std::to_string(cs.size()));
    }
    for (int m : mult) {
        if (m < 0) throw InvalidSequenceError("negative multiplicity");
    }
    if (!cs.group().is_zero(cs.content_sum(mult))) {
        throw InvalidSequenceError("sequence " + mult_to_string(mult) + " is not zero-sum");
    }
    return ZeroSumSequence{std::move(mult)};
}

ZeroSumSequence sequence_of(const ClassSubset& cs, const std::vector<GroupElement>& elems) {
    std::vector<int> mult(cs.size(), 0);
    for (const auto& e : elems) {
        int idx = cs.index_of(e);
        if (idx < 0) throw InvalidSequenceError("element outside the class subset");
        ++mult[static_cast<std::size_t>(idx)];
    }
    return make_sequence(cs, std::move(mult));
}

namespace {

void check_sequence(const ClassSubset& cs, const ZeroSumSequence& s) {
    if (s.mult.size() != cs.size()) {
        throw InvalidSequenceError("sequence does not match the class subset");
    }
    for (int m : s.mult) {
        if (m < 0) throw InvalidSequenceError("negative multiplicity");
    }
    if (!cs.group().is_zero(cs.content_sum(s.mult))) {
        throw InvalidSequenceError("sequence " + mult_to_string(s.mult) + " is not zero-sum");
    }
}

} // namespace

bool is_atom(const ClassSubset& cs, const ZeroSumSequence& s) {
    check_sequence(cs, s);
    if (s.empty()) {
        throw InvalidSequenceError("the empty sequence is not an atom candidate");
    }
    const auto& g = cs.group();
    const std::vector<int>& mult = s.mult;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] > 0) support.push_back(i);
    }
    // Odometer over proper sub-multisets.
    std::vector<int> pick(support.size(), 0);
    while (true) {
        // advance odometer
        std::size_t j = 0;
        while (j < support.size() && pick[j] == mult[support[j]]) {
            pick[j] = 0;
            ++j;
        }
        if (j == support.size()) break;
        ++pick[j];
        int len = std::accumulate(pick.begin(), pick.end(), 0);
        if (len == s.total_length()) continue; // the full multiset
        GroupElement sum = g.zero();
        for (std::size_t k = 0; k < support.size(); ++k) {
            for (int c = 0; c < pick[k]; ++c) sum = g.add(sum, cs.classes()[support[k]]);
        }
        if (g.is_zero(sum)) return false;
    }
    return true;
}

AtomTable::AtomTable(ClassSubset cs, std::vector<ZeroSumSequence> atoms)
    : cs_(std::move(cs)), atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end(), [](const ZeroSumSequence& a, const ZeroSumSequence& b) {
        int la = a.total_length(), lb = b.total_length();
        if (la != lb) return la < lb;
        return a.mult < b.mult;
    });
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        index_[atoms_[i].mult] = static_cast<int>(i);
    }
}

int AtomTable::index_of(const ZeroSumSequence& s) const {
    auto it = index_.find(s.mult);
    return it == index_.end() ? -1 : it->second;
}

namespace {

// DFS state for atom enumeration. Tracks, per node, the set of group values
// reachable as a sum of (a) any sub-multiset including the empty one and
// (b) any proper sub-multiset including the empty one. A candidate extension
// by class g creates a zero-sum proper sub-multiset iff -g is reachable as a
// proper sum, which is exactly the pruning condition.
struct AtomSearch {
    const ClassSubset& cs;
    const FiniteAbelianGroup& g;
    int max_len;
    std::vector<std::vector<long long>> add_table; // add_table[c][v] = v + class c
    std::vector<ZeroSumSequence> found;

    explicit AtomSearch(const ClassSubset& cs_)
        : cs(cs_), g(cs_.group()), max_len(static_cast<int>(g.order())) {
        add_table.resize(cs.size());
        for (std::size_t c = 0; c < cs.size(); ++c) {
            add_table[c].resize(static_cast<std::size_t>(g.order()));
            for (long long v = 0; v < g.order(); ++v) {
                add_table[c][static_cast<std::size_t>(v)] =
                    g.index_of(g.add(g.element_at(v), cs.classes()[c]));
            }
        }
    }

    void run() {
        std::vector<int> mult(cs.size(), 0);
        std::vector<char> all(static_cast<std::size_t>(g.order()), 0);
        std::vector<char> proper(static_cast<std::size_t>(g.order()), 0);
        all[0] = 1; // empty sub-multiset
        dfs(0, mult, 0, 0, all, proper);
    }

    void dfs(std::size_t first_class, std::vector<int>& mult, int len, long long sum,
             const std::vector<char>& all, const std::vector<char>& proper) {
        for (std::size_t c = first_class; c < cs.size(); ++c) {
            long long neg = g.index_of(g.negate(cs.classes()[c]));
            if (proper[static_cast<std::size_t>(neg)]) continue; // would embed a zero-sum proper part
            long long nsum = add_table[c][static_cast<std::size_t>(sum)];
            ++mult[c];
            if (nsum == 0) {
                found.push_back(ZeroSumSequence{mult});
            } else if (len + 1 < max_len) {
                std::vector<char> nall(all.size()), nproper(all.size());
                for (std::size_t v = 0; v < all.size(); ++v) {
                    auto shifted = static_cast<std::size_t>(add_table[c][v]);
                    if (all[v]) {
                        nall[v] = 1;
                        nall[shifted] = 1;
                        nproper[v] = 1; // previous full multiset is now proper
                    }
                    if (proper[v] && !nproper[shifted]) nproper[shifted] = 1;
                }
                // the previous proper sums stay proper
                for (std::size_t v = 0; v < all.size(); ++v) {
                    if (proper[v]) nproper[v] = 1;
                }
                dfs(c, mult, len + 1, nsum, nall, nproper);
            }
            --mult[c];
        }
    }
};

} // namespace

AtomTable enumerate_atoms(const ClassSubset& cs) {
    if (cs.size() == 0) return AtomTable(cs, {});
    AtomSearch search(cs);
    search.run();
    return AtomTable(cs, std::move(search.found));
}

int FactorizationVector::length() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

std::vector<int> factorization_content(const FactorizationVector& f, const AtomTable& t) {
    std::vector<int> content(t.class_subset().size(), 0);
    for (std::size_t a = 0; a < f.counts.size(); ++a) {
        const auto& atom = t.atom(static_cast<int>(a)).mult;
        for (std::size_t i = 0; i < content.size(); ++i) {
            content[i] += f.counts[a] * atom[i];
        }
    }
    return content;
}

namespace {

bool fits(const std::vector<int>& atom, const std::vector<int>& remaining) {
    for (std::size_t i = 0; i < atom.size(); ++i) {
        if (atom[i] > remaining[i]) return false;
    }
    return true;
}

void factorization_dfs(const AtomTable& t, const std::vector<int>& allowed, std::size_t pos,
                       std::vector<int>& remaining, std::vector<int>& counts,
                       std::vector<FactorizationVector>& out) {
    bool done = std::all_of(remaining.begin(), remaining.end(), [](int m) { return m == 0; });
    if (done) {
        out.push_back(FactorizationVector{counts});
        return;
    }
    if (pos >= allowed.size()) return;
    // the first uncovered class must be hit by some remaining atom
    std::size_t first = 0;
    while (first < remaining.size() && remaining[first] == 0) ++first;
    bool coverable = false;
    for (std::size_t p = pos; p < allowed.size(); ++p) {
        if (t.atom(allowed[p]).mult[first] > 0) {
            coverable = true;
            break;
        }
    }
    if (!coverable) return;

    int a = allowed[pos];
    const auto& atom = t.atom(a).mult;
    int max_copies = 0;
    {
        std::vector<int> tmp = remaining;
        while (fits(atom, tmp)) {
            ++max_copies;
            for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] -= atom[i];
        }
    }
    for (int k = max_copies; k >= 0; --k) {
        for (std::size_t i = 0; i < atom.size(); ++i) remaining[i] -= k * atom[i];
        counts[static_cast<std::size_t>(a)] = k;
        factorization_dfs(t, allowed, pos + 1, remaining, counts, out);
        counts[static_cast<std::size_t>(a)] = 0;
        for (std::size_t i = 0; i < atom.size(); ++i) remaining[i] += k * atom[i];
    }
}

} // namespace

std::vector<FactorizationVector> enumerate_factorizations(const ZeroSumSequence& s,
                                                          const AtomTable& t,
                                                          const std::vector<int>& allowed) {
    check_sequence(t.class_subset(), s);
    std::vector<int> remaining = s.mult;
    std::vector<int> counts(t.size(), 0);
    std::vector<FactorizationVector> out;
    factorization_dfs(t, allowed, 0, remaining, counts, out);
    std::sort(out.begin(), out.end(), [](const FactorizationVector& a, const FactorizationVector& b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a.counts < b.counts;
    });
    return out;
}

std::vector<FactorizationVector> enumerate_factorizations(const ZeroSumSequence& s,
                                                          const AtomTable& t) {
    std::vector<int> allowed(t.size());
    std::iota(allowed.begin(), allowed.end(), 0);
    return enumerate_factorizations(s, t, allowed);
}

std::set<int> length_set(const ZeroSumSequence& s, const AtomTable& t) {
    std::set<int> lengths;
    for (const auto& f : enumerate_factorizations(s, t)) {
        lengths.insert(f.length());
    }
    return lengths;
}

} // namespace hfdlab
