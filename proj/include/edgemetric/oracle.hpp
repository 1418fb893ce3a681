#pragma once

// Brute-force engines used to cross-check the fast paths. All of them are
// exponential; every one takes an explicit budget and throws
// errc::budget_exceeded instead of approximating.

#include "arith.hpp"
#include "error.hpp"
#include "hilbert.hpp"
#include "ideals.hpp"
#include "metrics.hpp"
#include "orbits.hpp"
#include "structures.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace edgemetric {

/// Monomials of degree <= m-1 lying in exactly one of the two edge ideals.
inline big_int symdiff_monomial_count(const contact_structure& a, const contact_structure& b, std::uint64_t m,
                                      const enumeration_budget& budget = {}) {
    detail::require_same_length(a, b);
    if (m < 1) {
        throw error(errc::invalid_metric_index, "m must be positive");
    }
    budget.require(a.length(), m - 1);
    const auto ia = edge_ideal(a);
    const auto ib = edge_ideal(b);
    std::uint64_t count = 0;
    for_each_monomial(a.length(), m - 1, [&](std::span<const std::uint32_t> dense, std::uint64_t) {
        if (ia.contains(dense) != ib.contains(dense)) {
            ++count;
        }
    });
    return count;
}

struct path_budget {
    std::uint64_t max_steps = 50'000'000;
};

/// k-contact simple paths (k+1 distinct nodes) in Γ1 ∪ Γ2 by exhaustive DFS.
/// Each path is found once from either end, so the directed count is halved.
inline std::uint64_t simple_path_count(const contact_structure& a, const contact_structure& b, std::size_t k,
                                       const path_budget& budget = {}, std::uint64_t* steps_used = nullptr) {
    detail::require_same_length(a, b);
    if (k == 0) {
        return a.length();
    }
    const auto adj = union_of(a, b).adjacency();
    const std::size_t n = a.length();
    std::vector<bool> on_path(n + 1, false);
    std::uint64_t directed = 0;
    std::uint64_t steps = 0;
    auto dfs = [&](auto&& self, node_t v, std::size_t depth) -> void {
        if (++steps > budget.max_steps) {
            throw error(errc::budget_exceeded, "path enumeration exceeded " + std::to_string(budget.max_steps) +
                                                   " steps");
        }
        if (depth == k) {
            ++directed;
            return;
        }
        on_path[v] = true;
        for (auto w : adj[v]) {
            if (!on_path[w]) {
                self(self, w, depth + 1);
            }
        }
        on_path[v] = false;
    };
    for (node_t v = 1; v <= n; ++v) {
        dfs(dfs, v, 0);
    }
    if (steps_used != nullptr) {
        *steps_used += steps;
    }
    return directed / 2;
}

/// The subgroup of S_n generated by the transpositions (i j), i·j ∈ Q, as a
/// set of one-line permutations on 0..n-1. Only for n <= 7.
inline std::set<std::vector<std::uint8_t>> transposition_subgroup(const contact_structure& s) {
    constexpr std::size_t max_n = 7;
    if (s.length() > max_n) {
        throw error(errc::budget_exceeded, "subgroup closure is limited to n <= " + std::to_string(max_n));
    }
    std::vector<std::uint8_t> identity(s.length());
    std::iota(identity.begin(), identity.end(), std::uint8_t{0});
    std::set<std::vector<std::uint8_t>> group{identity};
    std::vector<std::vector<std::uint8_t>> frontier{identity};
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint8_t>> next;
        for (const auto& p : frontier) {
            for (const auto& c : s.contacts()) {
                auto q = p;
                std::swap(q[c.i - 1], q[c.j - 1]);
                if (group.insert(q).second) {
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    return group;
}

inline bool subgroup_closure_equal(const contact_structure& a, const contact_structure& b) {
    detail::require_same_length(a, b);
    return transposition_subgroup(a) == transposition_subgroup(b);
}

// ---------------------------------------------------------------------------
// Full cross-check of one pair

struct oracle_entry {
    std::string quantity;
    std::string fast;
    std::string oracle;
    bool agree = false;
};

struct oracle_skip {
    std::string quantity;
    std::string reason;
};

struct oracle_report {
    std::vector<oracle_entry> checked;
    std::vector<oracle_skip> skipped;
    std::uint64_t monomials_enumerated = 0;
    std::uint64_t path_steps = 0;
    std::uint64_t group_elements = 0;

    [[nodiscard]] bool all_agree() const {
        return std::all_of(checked.begin(), checked.end(), [](const oracle_entry& e) { return e.agree; });
    }
};

struct check_options {
    std::uint64_t max_m = 6;
    enumeration_budget budget{};
    path_budget paths{};
};

/// Runs every applicable fast/oracle comparison for the pair. Comparisons
/// that do not fit the budget are listed under `skipped`.
inline oracle_report run_check(const contact_structure& a, const contact_structure& b,
                               const check_options& options = {}) {
    detail::require_same_length(a, b);
    oracle_report report;
    const std::size_t n = a.length();
    const bool secondary = is_secondary(a) && is_secondary(b);
    const metric_options forced{true, std::max<std::uint64_t>(options.max_m, 3)};

    auto record = [&](std::string quantity, const auto& fast, const auto& oracle) {
        std::ostringstream f;
        std::ostringstream o;
        f << std::boolalpha;
        o << std::boolalpha;
        f << fast;
        o << oracle;
        report.checked.push_back({std::move(quantity), f.str(), o.str(), fast == oracle});
    };

    for (std::uint64_t m = 3; m <= options.max_m; ++m) {
        const std::string suffix = "_" + std::to_string(m);
        big_int oracle_raw;
        try {
            oracle_raw = symdiff_monomial_count(a, b, m, options.budget);
        } catch (const error& e) {
            if (e.code() != errc::budget_exceeded) {
                throw;
            }
            report.skipped.push_back({"d'" + suffix, e.what()});
            continue;
        }
        report.monomials_enumerated += static_cast<std::uint64_t>(
            binom(static_cast<std::int64_t>(n + m - 1), static_cast<std::int64_t>(n)));
        record("d'" + suffix + " hilbert", d_prime(a, b, m, forced), oracle_raw);

        const big_int norm = normalizer(n, m);
        const rational oracle_normalized(oracle_raw, norm);
        if (m == 3) {
            record("d3_closed", rational(d3_closed(a, b)), oracle_normalized);
        } else if (m == 4) {
            record("d4_closed_general", d4_closed_general(a, b), oracle_normalized);
            if (secondary) {
                record("d4_closed_rna", d4_closed_rna(a, b), oracle_normalized);
            }
        } else if (m == 5 && secondary) {
            record("d5_closed_rna", d5_closed_rna(a, b), oracle_normalized);
        } else if (m == 6 && secondary) {
            record("d6_closed_rna", d6_closed_rna(a, b), oracle_normalized);
        }
    }

    auto count_paths = [&](std::size_t k) -> std::optional<std::uint64_t> {
        try {
            return simple_path_count(a, b, k, options.paths, &report.path_steps);
        } catch (const error& e) {
            if (e.code() != errc::budget_exceeded) {
                throw;
            }
            report.skipped.push_back({"paths_" + std::to_string(k), e.what()});
            return std::nullopt;
        }
    };
    const auto joined = union_of(a, b);
    if (auto angles = count_paths(2)) {
        record("angle_count(union)", angle_count(joined), *angles);
    }
    {
        // both cross terms against their defining difference of counts
        const auto a_direct = 2 * angle_count(joined) - angle_count(a) - angle_count(b);
        const auto t_direct = 2 * triangle_count(joined) - triangle_count(a) - triangle_count(b);
        record("angle_cross_term", angle_cross_term(a, b), a_direct);
        record("triangle_cross_term", triangle_cross_term(a, b), t_direct);
    }
    if (secondary) {
        const auto stats = decompose(a, b).stats;
        for (std::size_t k = 2; k <= 4; ++k) {
            if (auto paths = count_paths(k)) {
                record("a_" + std::to_string(k), a_k(stats, k), *paths);
            }
        }
    } else {
        report.skipped.push_back({"a_k", "NotSecondary: orbit statistics need two secondary structures"});
    }

    try {
        const auto ga = transposition_subgroup(a);
        const auto gb = transposition_subgroup(b);
        report.group_elements = ga.size() + gb.size();
        record("sgr_indistinguishable", sgr_indistinguishable(a, b), ga == gb);
    } catch (const error& e) {
        if (e.code() != errc::budget_exceeded) {
            throw;
        }
        report.skipped.push_back({"sgr_indistinguishable", e.what()});
    }
    return report;
}

} // namespace edgemetric
