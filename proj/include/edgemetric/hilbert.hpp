#pragma once

#include "arith.hpp"
#include "error.hpp"
#include "ideals.hpp"
#include "structures.hpp"

#include <cstdint>
#include <vector>

namespace edgemetric {

/// H(m) for any contact structure from square-free member counts:
/// H(m) = binom(n+m, n) - sum_{k=1..m} binom(m, k) SF_k.
inline big_int hilbert_generic(const contact_structure& s, std::uint64_t m) {
    const auto n = static_cast<std::int64_t>(s.length());
    const auto degree = static_cast<std::int64_t>(m);
    const auto sf = sf_counts(s, static_cast<std::size_t>(std::min<std::int64_t>(degree, n)));
    big_int h = binom(n + degree, n);
    for (std::int64_t k = 1; k < static_cast<std::int64_t>(sf.size()); ++k) {
        h -= binom(degree, k) * sf[static_cast<std::size_t>(k)];
    }
    return h;
}

/// H(m) for a secondary structure with q contacts on n nodes; depends only
/// on (n, q).
inline big_int hilbert_secondary_closed(std::uint64_t q, std::size_t n, std::uint64_t m) {
    if (2 * q > n) {
        throw error(errc::precondition_violated,
                    std::to_string(q) + " disjoint contacts do not fit on " + std::to_string(n) + " nodes");
    }
    const auto nn = static_cast<std::int64_t>(n);
    const auto mm = static_cast<std::int64_t>(m);
    big_int h = 0;
    for (std::int64_t j = 0; 2 * j <= mm; ++j) {
        const big_int term = binom(static_cast<std::int64_t>(q), j) * binom(nn + mm - 2 * j, nn);
        if (j % 2 == 0) {
            h += term;
        } else {
            h -= term;
        }
    }
    return h;
}

/// Ground truth: count monomials of degree <= m outside the edge ideal.
inline big_int hilbert_enumerated(const contact_structure& s, std::uint64_t m,
                                  const enumeration_budget& budget = {}) {
    budget.require(s.length(), m);
    const auto ideal = edge_ideal(s);
    std::uint64_t outside = 0;
    for_each_monomial(s.length(), m, [&](std::span<const std::uint32_t> dense, std::uint64_t) {
        if (!ideal.contains(dense)) {
            ++outside;
        }
    });
    return outside;
}

enum class hilbert_method { generic, closed, enumerate };

/// (m, H(m)) for m = 0..max_degree.
struct hilbert_table {
    std::size_t n = 0;
    std::vector<big_int> values;
};

inline hilbert_table compute_hilbert_table(const contact_structure& s, std::uint64_t max_degree,
                                           hilbert_method method = hilbert_method::generic,
                                           const enumeration_budget& budget = {}) {
    hilbert_table table{s.length(), {}};
    if (method == hilbert_method::closed && !is_secondary(s)) {
        throw error(errc::not_secondary, "the closed Hilbert formula needs unique bonds");
    }
    if (method == hilbert_method::enumerate) {
        budget.require(s.length(), max_degree);
    }
    for (std::uint64_t m = 0; m <= max_degree; ++m) {
        switch (method) {
        case hilbert_method::generic: table.values.push_back(hilbert_generic(s, m)); break;
        case hilbert_method::closed: table.values.push_back(hilbert_secondary_closed(s.size(), s.length(), m)); break;
        case hilbert_method::enumerate: table.values.push_back(hilbert_enumerated(s, m, budget)); break;
        }
    }
    return table;
}

} // namespace edgemetric
