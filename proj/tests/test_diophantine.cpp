#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "hfdlab/diophantine.hpp"

using namespace hfdlab;

namespace {

// Minimal nonzero solutions of Ax = 0 inside the box [0, cap]^n, found by
// walking the whole box: a solution is minimal iff no smaller nonzero
// solution sits below it, and any witness below it is in the box too.
std::vector<std::vector<long long>> minimal_solutions_in_box(const DiophantineSystem& system,
                                                             long long cap) {
    const std::size_t n = system.columns();
    std::vector<std::vector<long long>> solutions;
    std::vector<long long> v(n, 0);
    while (true) {
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (v[i] < cap) {
                ++v[i];
                break;
            }
            v[i] = 0;
        }
        if (i == n) break;
        bool ok = true;
        for (const auto& row : system.rows) {
            long long dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += row[j] * v[j];
            if (dot != 0) {
                ok = false;
                break;
            }
        }
        if (ok) solutions.push_back(v);
    }
    std::vector<std::vector<long long>> minimal;
    for (const auto& s : solutions) {
        bool dominated = false;
        for (const auto& t : solutions) {
            if (t == s) continue;
            bool below = true;
            for (std::size_t j = 0; j < n; ++j) {
                if (t[j] > s[j]) {
                    below = false;
                    break;
                }
            }
            if (below) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

std::vector<std::vector<long long>> in_box(std::vector<std::vector<long long>> basis,
                                           long long cap) {
    std::erase_if(basis, [cap](const std::vector<long long>& v) {
        return std::any_of(v.begin(), v.end(), [cap](long long x) { return x > cap; });
    });
    std::sort(basis.begin(), basis.end());
    return basis;
}

} // namespace

TEST_CASE("hilbert basis of hand-solved systems") {
    DiophantineSystem balance;
    balance.rows = {{1, -1}};
    CHECK(hilbert_basis(balance) == std::vector<std::vector<long long>>{{1, 1}});

    DiophantineSystem weighted;
    weighted.rows = {{2, -3}};
    CHECK(hilbert_basis(weighted) == std::vector<std::vector<long long>>{{3, 2}});

    DiophantineSystem sum;
    sum.rows = {{1, 1, -1}};
    const auto basis = hilbert_basis(sum);
    const std::vector<std::vector<long long>> expected = {{0, 1, 1}, {1, 0, 1}};
    CHECK(in_box(basis, 10) == expected);

    DiophantineSystem no_rows;
    no_rows.rows = {};
    CHECK(hilbert_basis(no_rows).empty());

    DiophantineSystem infeasible;
    infeasible.rows = {{1}};
    CHECK(hilbert_basis(infeasible).empty());
}

TEST_CASE("hilbert basis respects upper bounds") {
    DiophantineSystem system;
    system.rows = {{1, -1}};
    system.upper_bounds = {{0, 5}};
    CHECK(hilbert_basis(system).empty());

    system.upper_bounds = {{2, 2}};
    CHECK(hilbert_basis(system) == std::vector<std::vector<long long>>{{1, 1}});
}

TEST_CASE("hilbert basis agrees with box search") {
    std::vector<DiophantineSystem> systems;
    DiophantineSystem a;
    a.rows = {{2, 3, -4}};
    systems.push_back(a);
    DiophantineSystem b;
    b.rows = {{1, 2, -2, -1}, {1, -1, 0, 0}};
    systems.push_back(b);
    DiophantineSystem c;
    c.rows = {{3, -2, 0}, {0, 2, -3}};
    systems.push_back(c);

    for (const auto& system : systems) {
        const auto basis = hilbert_basis(system);
        for (long long cap : {3, 6}) {
            CHECK(in_box(basis, cap) == minimal_solutions_in_box(system, cap));
        }
    }
}

TEST_CASE("solver validation and resource cap") {
    DiophantineSystem ragged;
    ragged.rows = {{1, -1}, {1}};
    CHECK_THROWS_AS(hilbert_basis(ragged), InvalidParameterError);

    DiophantineSystem bad_bounds;
    bad_bounds.rows = {{1, -1}};
    bad_bounds.upper_bounds = {{1}};
    CHECK_THROWS_AS(hilbert_basis(bad_bounds), InvalidParameterError);

    DiophantineSystem system;
    system.rows = {{1, 1, 1, -1, -1, -1}};
    SolverOptions tiny;
    tiny.candidate_cap = 2;
    CHECK_THROWS_AS(hilbert_basis(system, tiny), ResourceCapError);
}

TEST_CASE("bounded solutions of inhomogeneous systems") {
    DiophantineSystem system;
    system.rows = {{2}};
    CHECK(bounded_solution(system, {4}) == std::vector<long long>{2});
    CHECK_FALSE(bounded_solution(system, {3}).has_value());

    DiophantineSystem pair;
    pair.rows = {{1, 2}, {0, 1}};
    const auto sol = bounded_solution(pair, {5, 2});
    REQUIRE(sol.has_value());
    CHECK(*sol == std::vector<long long>{1, 2});

    DiophantineSystem bounded;
    bounded.rows = {{1, 1}};
    bounded.upper_bounds = {{1, 1}};
    CHECK_FALSE(bounded_solution(bounded, {3}).has_value());
    CHECK(bounded_solution(bounded, {2}) == std::vector<long long>{1, 1});

    DiophantineSystem empty;
    CHECK(bounded_solution(empty, {}).has_value());

    CHECK_THROWS_AS(bounded_solution(system, {1, 2}), InvalidParameterError);
}
