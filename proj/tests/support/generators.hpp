#pragma once

// Structure generators for exhaustive and randomized tests.

#include <edgemetric/structures.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace edgemetric::testing {

using pair_list = std::vector<std::pair<std::int64_t, std::int64_t>>;

/// Every secondary structure of length n (pseudoknots included).
inline std::vector<contact_structure> all_secondary_structures(std::size_t n) {
    std::vector<contact_structure> out;
    std::vector<bool> used(n + 1, false);
    pair_list pairs;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        while (i <= n && used[i]) {
            ++i;
        }
        if (i > n) {
            out.push_back(validate(n, pairs, structure_kind::secondary));
            return;
        }
        used[i] = true;
        self(self, i + 1); // i stays isolated
        for (std::size_t j = i + 2; j <= n; ++j) {
            if (!used[j]) {
                used[j] = true;
                pairs.emplace_back(i, j);
                self(self, i + 1);
                pairs.pop_back();
                used[j] = false;
            }
        }
        used[i] = false;
    };
    rec(rec, 1);
    return out;
}

/// Every non-consecutive pair i < j of [n].
inline pair_list admissible_contacts(std::size_t n) {
    pair_list out;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 2; j <= n; ++j) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

/// Every contact structure of length n; 2^(admissible contacts) of them.
inline std::vector<contact_structure> all_contact_structures(std::size_t n) {
    const auto candidates = admissible_contacts(n);
    std::vector<contact_structure> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
        pair_list pairs;
        for (std::size_t b = 0; b < candidates.size(); ++b) {
            if ((mask >> b) & 1U) {
                pairs.push_back(candidates[b]);
            }
        }
        out.push_back(validate(n, pairs));
    }
    return out;
}

/// Random secondary structure: each admissible contact is tried once in
/// random order and kept with probability `keep` if both ends are free.
inline contact_structure random_secondary(std::mt19937_64& rng, std::size_t n, double keep = 0.5) {
    auto candidates = admissible_contacts(n);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::bernoulli_distribution coin(keep);
    std::vector<bool> used(n + 1, false);
    pair_list pairs;
    for (auto [i, j] : candidates) {
        if (!used[i] && !used[j] && coin(rng)) {
            used[i] = used[j] = true;
            pairs.emplace_back(i, j);
        }
    }
    return validate(n, pairs, structure_kind::secondary);
}

/// Random contact structure with independent edge probability p.
inline contact_structure random_arbitrary(std::mt19937_64& rng, std::size_t n, double p = 0.3) {
    std::bernoulli_distribution coin(p);
    pair_list pairs;
    for (auto c : admissible_contacts(n)) {
        if (coin(rng)) {
            pairs.push_back(c);
        }
    }
    return validate(n, pairs);
}

/// Random secondary structure with exactly q contacts (2q <= n - 1 keeps
/// this always satisfiable for n >= 3).
inline contact_structure random_secondary_with(std::mt19937_64& rng, std::size_t n, std::size_t q) {
    for (;;) {
        auto candidates = admissible_contacts(n);
        std::shuffle(candidates.begin(), candidates.end(), rng);
        std::vector<bool> used(n + 1, false);
        pair_list pairs;
        for (auto [i, j] : candidates) {
            if (pairs.size() == q) {
                break;
            }
            if (!used[i] && !used[j]) {
                used[i] = used[j] = true;
                pairs.emplace_back(i, j);
            }
        }
        if (pairs.size() == q) {
            return validate(n, pairs, structure_kind::secondary);
        }
    }
}

} // namespace edgemetric::testing
