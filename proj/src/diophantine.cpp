#include "hfdlab/diophantine.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

namespace hfdlab {

namespace {

void validate(const DiophantineSystem& system) {
    const std::size_t n = system.columns();
    for (const auto& row : system.rows) {
        if (row.size() != n) throw InvalidParameterError("ragged coefficient matrix");
    }
    if (system.upper_bounds && system.upper_bounds->size() != n) {
        throw InvalidParameterError("upper_bounds size does not match the number of columns");
    }
    for (const auto& budget : system.budgets) {
        if (budget.weights.size() != n) {
            throw InvalidParameterError("budget weights do not match the number of columns");
        }
        for (long long w : budget.weights) {
            if (w < 0) throw InvalidParameterError("budget weights must be nonnegative");
        }
    }
}

// small <= big component-wise.
bool dominates(const std::vector<long long>& small, const std::vector<long long>& big) {
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (small[i] > big[i]) return false;
    }
    return true;
}

bool degree_lex_less(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long da = std::accumulate(a.begin(), a.end(), 0LL);
    long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return da < db;
    return a < b;
}

} // namespace

std::vector<std::vector<long long>> hilbert_basis(const DiophantineSystem& system,
                                                  const SolverOptions& options) {
    validate(system);
    const std::size_t n = system.columns();
    const std::size_t m = system.rows.size();

    std::vector<std::vector<long long>> cols(n, std::vector<long long>(m, 0));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) cols[c][r] = system.rows[r][c];
    }

    auto within_bounds = [&](const std::vector<long long>& x) {
        if (system.upper_bounds) {
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i] > (*system.upper_bounds)[i]) return false;
            }
        }
        for (const auto& budget : system.budgets) {
            long long weight = 0;
            for (std::size_t i = 0; i < n; ++i) weight += budget.weights[i] * x[i];
            if (weight > budget.bound) return false;
        }
        return true;
    };

    std::vector<std::vector<long long>> basis;
    // Frontier of one degree level, keyed by the vector itself so duplicates
    // produced along different paths collapse and iteration order is fixed.
    std::map<std::vector<long long>, std::vector<long long>> frontier;
    std::size_t created = 0;

    auto bump = [&]() {
        if (++created > options.candidate_cap) {
            throw ResourceCapError("candidate cap of " + std::to_string(options.candidate_cap) +
                                   " exceeded while completing a Hilbert basis");
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> x(n, 0);
        x[i] = 1;
        if (!within_bounds(x)) continue;
        bump();
        frontier.emplace(std::move(x), cols[i]);
    }

    while (!frontier.empty()) {
        std::map<std::vector<long long>, std::vector<long long>> next;
        for (const auto& [x, v] : frontier) {
            if (std::all_of(v.begin(), v.end(), [](long long a) { return a == 0; })) {
                // Solutions strictly below x have smaller degree and are
                // already in the basis, so this test settles minimality.
                bool minimal = true;
                for (const auto& b : basis) {
                    if (dominates(b, x)) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) basis.push_back(x);
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                long long dot = 0;
                for (std::size_t r = 0; r < m; ++r) dot += v[r] * cols[i][r];
                if (dot >= 0) continue;
                std::vector<long long> nx = x;
                ++nx[i];
                if (!within_bounds(nx)) continue;
                if (next.count(nx)) continue;
                bool pruned = false;
                for (const auto& b : basis) {
                    if (dominates(b, nx)) {
                        pruned = true;
                        break;
                    }
                }
                if (pruned) continue;
                std::vector<long long> nv = v;
                for (std::size_t r = 0; r < m; ++r) nv[r] += cols[i][r];
                bump();
                next.emplace(std::move(nx), std::move(nv));
            }
        }
        frontier = std::move(next);
    }

    std::sort(basis.begin(), basis.end(), degree_lex_less);
    return basis;
}

std::optional<std::vector<long long>> bounded_solution(const DiophantineSystem& system,
                                                       const std::vector<long long>& target,
                                                       const SolverOptions& options) {
    validate(system);
    if (target.size() != system.rows.size()) {
        throw InvalidParameterError("target size does not match the number of rows");
    }
    const std::size_t n = system.columns();
    if (system.rows.empty()) return std::vector<long long>(n, 0);

    DiophantineSystem extended;
    extended.rows.reserve(system.rows.size());
    for (std::size_t r = 0; r < system.rows.size(); ++r) {
        auto row = system.rows[r];
        row.push_back(-target[r]);
        extended.rows.push_back(std::move(row));
    }
    std::vector<long long> bounds =
        system.upper_bounds ? *system.upper_bounds
                            : std::vector<long long>(n, std::numeric_limits<long long>::max());
    bounds.push_back(1);
    extended.upper_bounds = std::move(bounds);
    for (const auto& budget : system.budgets) {
        auto weights = budget.weights;
        weights.push_back(0);
        extended.budgets.push_back({std::move(weights), budget.bound});
    }

    for (const auto& sol : hilbert_basis(extended, options)) {
        if (sol.back() == 1) {
            return std::vector<long long>(sol.begin(), sol.end() - 1);
        }
    }
    return std::nullopt;
}

std::vector<std::vector<long long>> kernel_lattice_basis(
    const std::vector<std::vector<long long>>& matrix) {
    const std::size_t m = matrix.size();
    const std::size_t n = m == 0 ? 0 : matrix.front().size();
    for (const auto& row : matrix) {
        if (row.size() != n) throw InvalidParameterError("ragged coefficient matrix");
    }
    std::vector<std::vector<long long>> work(n, std::vector<long long>(m + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < m; ++r) work[i][r] = matrix[r][i];
        work[i][m + i] = 1;
    }

    std::size_t top = 0;
    for (std::size_t c = 0; c < m && top < n; ++c) {
        while (true) {
            std::size_t pivot = n;
            for (std::size_t r = top; r < n; ++r) {
                if (work[r][c] != 0 &&
                    (pivot == n || std::llabs(work[r][c]) < std::llabs(work[pivot][c]))) {
                    pivot = r;
                }
            }
            if (pivot == n) break;
            std::swap(work[top], work[pivot]);
            bool cleared = true;
            for (std::size_t r = top + 1; r < n; ++r) {
                if (work[r][c] == 0) continue;
                const long long q = work[r][c] / work[top][c];
                if (q != 0) {
                    for (std::size_t j = c; j < m + n; ++j) work[r][j] -= q * work[top][j];
                }
                if (work[r][c] != 0) cleared = false;
            }
            if (cleared) {
                ++top;
                break;
            }
        }
    }

    std::vector<std::vector<long long>> kernel;
    kernel.reserve(n - top);
    for (std::size_t r = top; r < n; ++r) {
        kernel.emplace_back(work[r].begin() + static_cast<long>(m), work[r].end());
    }
    return kernel;
}

namespace {

bool is_zero_vector(const std::vector<long long>& v) {
    return std::all_of(v.begin(), v.end(), [](long long a) { return a == 0; });
}

long long full_l1_norm(const std::vector<long long>& v) {
    long long total = 0;
    for (long long a : v) total += std::llabs(a);
    return total;
}

// Sign-support bitmasks over the first 64 coordinates of the active
// coordinate set. The masks are a necessary condition for conformal
// domination and for sign conflict, so they act as a cheap prefilter; the
// coordinate loops stay authoritative.
struct SignMask {
    unsigned long long pos = 0;
    unsigned long long neg = 0;
};

// Completion state for the conformally minimal nonzero vectors of one
// support component of the kernel lattice: close the slot set under
// conformal normal forms of sums of sign-conflicting pairs, interreduce,
// and keep the minimal survivors.
class GraverCompletion {
public:
    GraverCompletion(std::size_t width, std::size_t cap) : width_(width), cap_(cap) {}

    void mark_component(std::size_t coord) {
        if (component_.empty()) component_.assign(width_, false);
        component_[coord] = true;
    }

    void charge(std::size_t amount) {
        created_ += amount;
        if (created_ > cap_) {
            throw ResourceCapError("candidate cap of " + std::to_string(cap_) +
                                   " exceeded while completing a kernel basis");
        }
    }

    std::size_t created() const { return created_; }

    // rows: lattice basis of the component, full width. Returns one
    // representative per opposite pair, first nonzero entry positive.
    std::vector<std::vector<long long>> run(std::vector<std::vector<long long>> rows) {
        if (rows.empty()) return {};
        reduce_to_pivot_form(rows);
        for (std::size_t c = 0; c < width_; ++c) {
            if (component_[c]) active_coords_.push_back(c);
        }
        depth_order_ = active_coords_;
        reset(std::move(rows));
        activation_loop();
        sweep_minimal();
        return collect();
    }

private:
    static constexpr std::uint32_t kNoSkip = static_cast<std::uint32_t>(-1);

    // Ternary trie over signed supports, depth-indexed by active coordinate.
    // A walk that only follows branches whose stored sign agrees with the
    // query vector reaches exactly the sign-compatible slots, so divisor
    // lookups skip the incompatible bulk without per-entry mask tests.
    struct TrieNode {
        std::int32_t kid[3] = {-1, -1, -1};
        std::int32_t head = -1;
    };

    struct WalkFrame {
        std::int32_t node;
        std::uint32_t di;
        std::uint32_t orient;
    };

    long long* value(std::uint32_t id) { return flat_.data() + std::size_t{id} * width_; }
    const long long* value(std::uint32_t id) const {
        return flat_.data() + std::size_t{id} * width_;
    }

    // Integer row reduction with column pivoting, preferring unit pivots;
    // when every pivot comes out 1 the rows are back-eliminated into an
    // identity block, which makes them mutually minimal seeds.
    void reduce_to_pivot_form(std::vector<std::vector<long long>>& rows) const {
        const std::size_t rank = rows.size();
        std::vector<char> used(width_, false);
        std::vector<std::size_t> pivots;
        bool all_unit = true;
        for (std::size_t top = 0; top < rank; ++top) {
            std::size_t best_col = width_;
            long long best_val = 0;
            for (std::size_t c = 0; c < width_; ++c) {
                if (used[c]) continue;
                long long min_abs = 0;
                for (std::size_t r = top; r < rank; ++r) {
                    const long long a = std::llabs(rows[r][c]);
                    if (a != 0 && (min_abs == 0 || a < min_abs)) min_abs = a;
                }
                if (min_abs != 0 && (best_val == 0 || min_abs < best_val)) {
                    best_col = c;
                    best_val = min_abs;
                    if (best_val == 1) break;
                }
            }
            if (best_col == width_) break; // rows below top are zero
            const std::size_t c = best_col;
            used[c] = true;
            pivots.push_back(c);
            while (true) {
                std::size_t pivot_row = rank;
                for (std::size_t r = top; r < rank; ++r) {
                    if (rows[r][c] != 0 &&
                        (pivot_row == rank ||
                         std::llabs(rows[r][c]) < std::llabs(rows[pivot_row][c]))) {
                        pivot_row = r;
                    }
                }
                std::swap(rows[top], rows[pivot_row]);
                bool cleared = true;
                for (std::size_t r = top + 1; r < rank; ++r) {
                    if (rows[r][c] == 0) continue;
                    const long long q = rows[r][c] / rows[top][c];
                    if (q != 0) {
                        for (std::size_t j = 0; j < width_; ++j) rows[r][j] -= q * rows[top][j];
                    }
                    if (rows[r][c] != 0) cleared = false;
                }
                if (cleared) break;
            }
            if (rows[top][c] < 0) {
                for (auto& a : rows[top]) a = -a;
            }
            if (rows[top][c] != 1) all_unit = false;
        }
        if (all_unit) {
            for (std::size_t top = rank; top-- > 0;) {
                const std::size_t c = pivots[top];
                for (std::size_t r = 0; r < top; ++r) {
                    const long long q = rows[r][c];
                    if (q != 0) {
                        for (std::size_t j = 0; j < width_; ++j) rows[r][j] -= q * rows[top][j];
                    }
                }
            }
        }
    }

    struct Measure {
        long long norm = 0;
        SignMask mask;
        bool zero = true;
    };

    Measure measure(const long long* v) const {
        Measure m;
        for (std::size_t c : active_coords_) {
            const long long a = v[c];
            if (a == 0) continue;
            m.zero = false;
            m.norm += std::llabs(a);
            if (c < 64) {
                if (a > 0) m.mask.pos |= 1ULL << c;
                else m.mask.neg |= 1ULL << c;
            }
        }
        return m;
    }

    void sign_normalize(long long* v) const {
        for (std::size_t c : active_coords_) {
            if (v[c] > 0) return;
            if (v[c] < 0) {
                for (std::size_t i = 0; i < width_; ++i) v[i] = -v[i];
                return;
            }
        }
    }

    // Seeds enter unactivated so every pair among them is still considered.
    void reset(std::vector<std::vector<long long>> seeds) {
        for (auto& s : seeds) sign_normalize(s.data());
        std::sort(seeds.begin(), seeds.end(), [this](const auto& a, const auto& b) {
            const long long na = active_l1(a.data());
            const long long nb = active_l1(b.data());
            if (na != nb) return na < nb;
            return a < b;
        });
        for (const auto& s : seeds) {
            const Measure m = measure(s.data());
            if (m.zero) continue;
            spawn(s.data(), m);
        }
    }

    long long active_l1(const long long* v) const {
        long long norm = 0;
        for (std::size_t c : active_coords_) norm += std::llabs(v[c]);
        return norm;
    }

    std::uint32_t spawn(const long long* v, const Measure& m) {
        const std::uint32_t id = count_++;
        flat_.insert(flat_.end(), v, v + width_);
        norm_.push_back(m.norm);
        mask_.push_back(m.mask);
        alive_.push_back(true);
        activated_.push_back(false);
        trie_insert(id);
        if (alive_count_ + 1 >= rebuild_at_) rebuild_trie();
        const std::size_t level = static_cast<std::size_t>(m.norm);
        if (by_norm_.size() <= level) by_norm_.resize(level + 1);
        by_norm_[level].push_back(id);
        heap_.emplace(m.norm, id);
        ++alive_count_;
        return id;
    }

    void trie_insert(std::uint32_t id) {
        const long long* v = value(id);
        std::size_t last = 0;
        for (std::size_t di = 0; di < depth_order_.size(); ++di) {
            if (v[depth_order_[di]] != 0) last = di;
        }
        std::int32_t node = 0;
        for (std::size_t di = 0; di <= last; ++di) {
            const long long a = v[depth_order_[di]];
            const int branch = a == 0 ? 0 : (a > 0 ? 1 : 2);
            std::int32_t next = trie_[node].kid[branch];
            if (next < 0) {
                next = static_cast<std::int32_t>(trie_.size());
                trie_[node].kid[branch] = next;
                trie_.emplace_back();
            }
            node = next;
        }
        item_next_.resize(count_, -1);
        item_next_[id] = trie_[node].head;
        trie_[node].head = static_cast<std::int32_t>(id);
    }

    // Orders the trie depth by how often a coordinate is nonzero among the
    // live slots: discriminating coordinates first makes sign mismatches
    // prune whole subtrees near the root. Rebuilt as the set grows.
    void rebuild_trie() {
        std::vector<std::size_t> density(width_, 0);
        for (std::uint32_t id = 0; id < count_; ++id) {
            if (!alive_[id]) continue;
            const long long* v = value(id);
            for (std::size_t c : active_coords_) {
                if (v[c] != 0) ++density[c];
            }
        }
        depth_order_ = active_coords_;
        std::stable_sort(depth_order_.begin(), depth_order_.end(),
                         [&](std::size_t a, std::size_t b) { return density[a] > density[b]; });
        trie_.assign(1, {});
        item_next_.assign(count_, -1);
        for (std::uint32_t id = 0; id < count_; ++id) {
            if (alive_[id]) trie_insert(id);
        }
        rebuild_at_ = std::max<std::size_t>(1024, 2 * alive_count_);
    }

    struct DivisorHit {
        std::uint32_t id = 0;
        long long q = 0;
        int sign = 0;
    };

    // Recently hit divisors, tried before any tree walk. Reduction chains
    // reuse the same few small divisors heavily, so this skips most walks.
    bool hot_probe(const long long* v, long long vnorm, std::uint32_t skip,
                   DivisorHit& hit) const {
        for (unsigned i = 0; i < hot_len_; ++i) {
            const std::uint32_t id = hot_[i];
            if (id == skip || !alive_[id] || norm_[id] > vnorm) continue;
            for (int sign : {+1, -1}) {
                const long long q = conformal_multiple(id, sign, v);
                if (q > 0) {
                    hit.id = id;
                    hit.q = q;
                    hit.sign = sign;
                    return true;
                }
            }
        }
        return false;
    }

    void hot_note(std::uint32_t id) const {
        for (unsigned i = 0; i < hot_len_; ++i) {
            if (hot_[i] == id) return;
        }
        if (hot_len_ < hot_.size()) {
            hot_[hot_len_++] = id;
        } else {
            hot_[hot_pos_] = id;
            hot_pos_ = (hot_pos_ + 1) % hot_.size();
        }
    }

    // First live slot (other than `skip`) that conformally divides v in
    // either orientation. Both orientations share one walk: a stack entry
    // carries which orientations are still sign-consistent with its path,
    // so a branch is descended at most once.
    DivisorHit find_divisor(const long long* v, long long vnorm, std::uint32_t skip) const {
        DivisorHit hit;
        if (hot_probe(v, vnorm, skip, hit)) return hit;
        WalkFrame frames[160];
        int top = 0;
        frames[top++] = {0, 0, 3};
        const std::uint32_t depth_limit = static_cast<std::uint32_t>(depth_order_.size());
        const TrieNode* nodes = trie_.data();
        const std::int32_t* nexts = item_next_.data();
        while (top > 0) {
            const WalkFrame f = frames[--top];
            const TrieNode& t = nodes[f.node];
            for (std::int32_t item = t.head; item >= 0; item = nexts[item]) {
                const auto id = static_cast<std::uint32_t>(item);
                if (id == skip || !alive_[id] || norm_[id] > vnorm) continue;
                if (f.orient & 1) {
                    const long long q = conformal_multiple(id, +1, v);
                    if (q > 0) {
                        hit.id = id;
                        hit.q = q;
                        hit.sign = +1;
                        hot_note(id);
                        return hit;
                    }
                }
                if (f.orient & 2) {
                    const long long q = conformal_multiple(id, -1, v);
                    if (q > 0) {
                        hit.id = id;
                        hit.q = q;
                        hit.sign = -1;
                        hot_note(id);
                        return hit;
                    }
                }
            }
            if (f.di >= depth_limit) continue;
            const std::uint32_t next_di = f.di + 1;
            const long long a = v[depth_order_[f.di]];
            if (a != 0) {
                if (t.kid[1] >= 0) {
                    const std::uint32_t keep = a > 0 ? (f.orient & 1u) : (f.orient & 2u);
                    if (keep != 0) frames[top++] = {t.kid[1], next_di, keep};
                }
                if (t.kid[2] >= 0) {
                    const std::uint32_t keep = a < 0 ? (f.orient & 1u) : (f.orient & 2u);
                    if (keep != 0) frames[top++] = {t.kid[2], next_di, keep};
                }
            }
            if (t.kid[0] >= 0) frames[top++] = {t.kid[0], next_di, f.orient};
        }
        return hit;
    }

    // Conformal normal form against the live slots, in place.
    bool reduce(long long* v, Measure& m) {
        m = measure(v);
        if (m.zero) return false;
        while (true) {
            const DivisorHit hit = find_divisor(v, m.norm, kNoSkip);
            if (hit.sign == 0) return true;
            const long long* h = value(hit.id);
            const long long f = hit.sign > 0 ? hit.q : -hit.q;
            for (std::size_t i = 0; i < width_; ++i) v[i] -= f * h[i];
            m = measure(v);
            if (m.zero) return false;
        }
    }

    // Largest q >= 0 with q * sign * value(id) conformally below v on the
    // active coordinates.
    long long conformal_multiple(std::uint32_t id, int sign, const long long* v) const {
        const long long* h = value(id);
        long long q = 0;
        for (std::size_t c : active_coords_) {
            const long long hv = sign > 0 ? h[c] : -h[c];
            if (hv == 0) continue;
            const long long ratio = v[c] / hv;
            if (ratio <= 0) return 0;
            if (q == 0 || ratio < q) q = ratio;
        }
        return q;
    }

    // Reduces the candidate in place; survivors are inserted and dominated
    // slots requeued through work_.
    void process_candidate(std::vector<long long>& v) {
        Measure m;
        if (!reduce(v.data(), m)) return;
        sign_normalize(v.data());
        m = measure(v.data());
        const std::uint32_t id = spawn(v.data(), m);
        interreduce(id, m);
    }

    void drain() {
        while (!work_.empty()) {
            std::vector<long long> v = std::move(work_.back());
            work_.pop_back();
            process_candidate(v);
        }
    }

    // Kills every slot the new element sits conformally below and requeues
    // the casualties: their normal forms against the shrunken basis keep the
    // closure intact. Dominators are strictly smaller in norm, so only the
    // levels above the new element need scanning.
    void interreduce(std::uint32_t id, const Measure& m) {
        for (std::size_t level = static_cast<std::size_t>(m.norm) + 1; level < by_norm_.size();
             ++level) {
            for (const std::uint32_t h : by_norm_[level]) {
                if (!alive_[h]) continue;
                const SignMask hm = mask_[h];
                long long q = 0;
                if (((m.mask.pos & ~hm.pos) | (m.mask.neg & ~hm.neg)) == 0) {
                    q = conformal_multiple(id, 1, value(h));
                }
                if (q == 0 && ((m.mask.pos & ~hm.neg) | (m.mask.neg & ~hm.pos)) == 0) {
                    q = conformal_multiple(id, -1, value(h));
                }
                if (q == 0) continue;
                alive_[h] = false;
                --alive_count_;
                work_.emplace_back(value(h), value(h) + width_);
            }
        }
    }

    // Activates live slots in ascending norm order and closes the set under
    // sign-conflicting pair sums among activated slots.
    void activation_loop() {
        while (!heap_.empty()) {
            const auto [norm, id] = heap_.top();
            heap_.pop();
            if (!alive_[id] || activated_[id]) continue;
            activated_[id] = true;
            pair_scan(id);
        }
    }

    void pair_scan(std::uint32_t id) {
        const std::uint32_t limit = count_;
        for (std::uint32_t g = 0; g < limit; ++g) {
            if (g == id || !activated_[g] || !alive_[g]) continue;
            const SignMask a = mask_[id];
            const SignMask b = mask_[g];
            if (((a.pos & b.neg) | (a.neg & b.pos)) != 0 || tail_conflict(id, g, +1)) {
                emit(id, g, +1);
                if (!alive_[id]) return;
            }
            if (!alive_[g]) continue;
            if (((a.pos & b.pos) | (a.neg & b.neg)) != 0 || tail_conflict(id, g, -1)) {
                emit(id, g, -1);
                if (!alive_[id]) return;
            }
        }
    }

    // Sign conflict on active coordinates beyond the mask range.
    bool tail_conflict(std::uint32_t s, std::uint32_t g, int relative_sign) const {
        if (active_coords_.empty() || active_coords_.back() < 64) return false;
        const long long* a = value(s);
        const long long* b = value(g);
        for (std::size_t c : active_coords_) {
            if (c < 64) continue;
            if (a[c] * (relative_sign * b[c]) < 0) return true;
        }
        return false;
    }

    void emit(std::uint32_t s, std::uint32_t g, int relative_sign) {
        charge(1);
        scratch_.resize(width_);
        const long long* p = value(s);
        const long long* q = value(g);
        if (relative_sign > 0) {
            for (std::size_t i = 0; i < width_; ++i) scratch_[i] = p[i] + q[i];
        } else {
            for (std::size_t i = 0; i < width_; ++i) scratch_[i] = p[i] - q[i];
        }
        process_candidate(scratch_);
        drain();
    }

    // Keeps only slots no other live slot sits conformally below. The
    // incremental interreduction already maintains this; one cheap pass at
    // the end guards the invariant.
    void sweep_minimal() {
        std::vector<std::uint32_t> order;
        order.reserve(alive_count_);
        for (std::uint32_t id = 0; id < count_; ++id) {
            if (alive_[id]) order.push_back(id);
        }
        std::sort(order.begin(), order.end(), [this](std::uint32_t x, std::uint32_t y) {
            if (norm_[x] != norm_[y]) return norm_[x] < norm_[y];
            return std::lexicographical_compare(value(x), value(x) + width_, value(y),
                                                value(y) + width_);
        });
        for (const std::uint32_t id : order) {
            if (find_divisor(value(id), norm_[id], id).sign != 0) {
                alive_[id] = false;
                --alive_count_;
            }
        }
    }

    std::vector<std::vector<long long>> collect() const {
        std::vector<std::vector<long long>> out;
        out.reserve(alive_count_);
        for (std::uint32_t id = 0; id < count_; ++id) {
            if (alive_[id]) out.emplace_back(value(id), value(id) + width_);
        }
        return out;
    }

    std::size_t width_ = 0;
    std::size_t cap_ = 0;
    std::size_t created_ = 0;
    std::vector<char> component_;
    std::vector<std::size_t> active_coords_;

    std::vector<long long> flat_;
    std::uint32_t count_ = 0;
    std::vector<long long> norm_;
    std::vector<SignMask> mask_;
    std::vector<char> alive_;
    std::vector<char> activated_;
    std::size_t alive_count_ = 0;
    std::vector<TrieNode> trie_{1};
    std::vector<std::int32_t> item_next_;
    std::vector<std::size_t> depth_order_;
    std::size_t rebuild_at_ = 1024;
    mutable std::array<std::uint32_t, 8> hot_{};
    mutable unsigned hot_len_ = 0;
    mutable unsigned hot_pos_ = 0;
    std::vector<std::vector<std::uint32_t>> by_norm_;
    std::priority_queue<std::pair<long long, std::uint32_t>,
                        std::vector<std::pair<long long, std::uint32_t>>,
                        std::greater<>>
        heap_;
    std::vector<std::vector<long long>> work_;
    std::vector<long long> scratch_;
};

} // namespace

std::vector<std::vector<long long>> graver_basis(const std::vector<std::vector<long long>>& matrix,
                                                 const SolverOptions& options) {
    const std::size_t n = matrix.empty() ? 0 : matrix.front().size();
    for (const auto& row : matrix) {
        if (row.size() != n) throw InvalidParameterError("ragged coefficient matrix");
    }
    if (n == 0) return {};

    std::vector<std::vector<long long>> kernel;
    for (auto& z : kernel_lattice_basis(matrix)) {
        if (!is_zero_vector(z)) kernel.push_back(std::move(z));
    }
    if (kernel.empty()) return {};

    // Basis vectors with overlapping supports share a component; minimal
    // vectors never straddle two components because the parts would be
    // conformal summands, so each component completes independently.
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& z : kernel) {
        std::size_t anchor = n;
        for (std::size_t c = 0; c < n; ++c) {
            if (z[c] == 0) continue;
            if (anchor == n) anchor = find(c);
            else parent[find(c)] = anchor;
        }
    }

    std::map<std::size_t, std::vector<std::vector<long long>>> component_rows;
    for (auto& z : kernel) {
        std::size_t anchor = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (z[c] != 0) {
                anchor = find(c);
                break;
            }
        }
        component_rows[anchor].push_back(std::move(z));
    }

    std::vector<std::vector<long long>> result;
    std::size_t spent = 0;
    for (auto& [anchor, rows] : component_rows) {
        GraverCompletion completion(n, options.candidate_cap);
        completion.charge(spent);
        for (std::size_t c = 0; c < n; ++c) {
            if (find(c) == anchor) completion.mark_component(c);
        }
        auto part = completion.run(std::move(rows));
        spent = completion.created();
        result.insert(result.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    }

    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        const long long na = full_l1_norm(a);
        const long long nb = full_l1_norm(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    return result;
}

} // namespace hfdlab
