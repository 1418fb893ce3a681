#pragma once

#include "arith.hpp"
#include "error.hpp"
#include "hilbert.hpp"
#include "orbits.hpp"
#include "structures.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>

namespace edgemetric {

struct metric_options {
    /// Skip the closed forms and always go through Hilbert functions.
    bool force_hilbert = false;
    /// Largest metric index accepted; bounds the SF_k counting cost.
    std::uint64_t max_m = 12;
};

/// d'_m (raw, an integer) and d_m = d'_m / binom(n+m-3, n).
struct metric_value {
    big_int raw;
    rational normalized;
    std::uint64_t m = 0;
    std::size_t n = 0;
};

/// binom(n+m-3, n): d'_m between the empty structure and any single contact.
inline big_int normalizer(std::size_t n, std::uint64_t m) {
    return binom(static_cast<std::int64_t>(n + m) - 3, static_cast<std::int64_t>(n));
}

namespace detail {
inline void require_metric_index(std::uint64_t m, const metric_options& options) {
    if (m < 3 || m > options.max_m) {
        throw error(errc::invalid_metric_index,
                    "m = " + std::to_string(m) + " outside [3, " + std::to_string(options.max_m) + "]");
    }
}

inline big_int choose2(std::size_t q) { return binom(static_cast<std::int64_t>(q), 2); }
} // namespace detail

/// d'_m through Hilbert functions of Γ1, Γ2 and Γ1 ∪ Γ2 at degree m-1.
/// Valid for arbitrary contact structures.
inline big_int d_prime(const contact_structure& a, const contact_structure& b, std::uint64_t m,
                       const metric_options& options = {}) {
    detail::require_same_length(a, b);
    detail::require_metric_index(m, options);
    const auto joined = union_of(a, b);
    return hilbert_generic(a, m - 1) + hilbert_generic(b, m - 1) - 2 * hilbert_generic(joined, m - 1);
}

/// d3 = |Q1 Δ Q2|.
inline big_int d3_closed(const contact_structure& a, const contact_structure& b) {
    return symmetric_difference_count(a, b);
}

/// d4 on arbitrary structures, from angle and triangle counts. Since
/// SF_3 = (n-2)|Q| - A + T, triangles enter with the opposite sign to angles:
/// d4 = |Δ| - (2A(∪) - A1 - A2 - (2T(∪) - T1 - T2)) / (n+1).
inline rational d4_closed_general(const contact_structure& a, const contact_structure& b) {
    const auto joined = union_of(a, b);
    const auto n = static_cast<std::int64_t>(a.length());
    const big_int angles = 2 * big_int(angle_count(joined)) - angle_count(a) - angle_count(b);
    const big_int triangles = 2 * big_int(triangle_count(joined)) - triangle_count(a) - triangle_count(b);
    const big_int correction = angles - triangles;
    return rational(d3_closed(a, b)) - rational(correction, n + 1);
}

/// d4 on secondary structures: |Δ| - 2(|Δ| - Λ≥2)/(n+1).
inline rational d4_closed_rna(const contact_structure& a, const contact_structure& b) {
    const auto stats = decompose(a, b).stats;
    const auto n = static_cast<std::int64_t>(a.length());
    const big_int delta = symmetric_difference_count(a, b);
    return rational(delta) - rational(2 * (delta - stats.lambda_geq(2)), n + 1);
}

/// d5 on secondary structures from orbit statistics.
inline rational d5_closed_rna(const contact_structure& a, const contact_structure& b) {
    const auto stats = decompose(a, b).stats;
    const auto n = static_cast<std::int64_t>(a.length());
    const big_int delta = symmetric_difference_count(a, b);
    const std::size_t joined = union_of(a, b).size();
    const big_int correction = 2 * (n - 1) * (delta - stats.lambda_geq(2)) + 2 * detail::choose2(joined) -
                               detail::choose2(a.size()) - detail::choose2(b.size()) +
                               2 * big_int(stats.lambda_geq(3) + stats.cyclic(4));
    return rational(delta) - rational(correction, binom(n + 2, 2));
}

/// d6 on secondary structures from orbit statistics. The bracket counts
/// square-free degree-5 members of I(Γ1 ∪ Γ2) by inclusion-exclusion over
/// contact sets spanning at most five nodes; an angle plus a disjoint
/// contact occurs (|Q1 ∪ Q2| - 2) A2 - 2 A3 times because every 3-contact
/// path holds two angles.
inline rational d6_closed_rna(const contact_structure& a, const contact_structure& b) {
    const auto stats = decompose(a, b).stats;
    const auto n = static_cast<std::int64_t>(a.length());
    const big_int delta = symmetric_difference_count(a, b);
    const auto joined = static_cast<std::int64_t>(union_of(a, b).size());
    const big_int shared_pairs =
        2 * detail::choose2(static_cast<std::size_t>(joined)) - detail::choose2(a.size()) - detail::choose2(b.size());
    const big_int correction = (n + 1) * shared_pairs +
                               2 * (binom(n, 2) + 4 - joined) * (delta - stats.lambda_geq(2)) +
                               2 * (n - 2) * big_int(stats.lambda_geq(3)) - 2 * big_int(stats.lambda_geq(4)) +
                               2 * (n - 3) * big_int(stats.cyclic(4));
    return rational(delta) - rational(correction, binom(n + 3, 3));
}

/// Evaluates d'_m and d_m. Identical inputs short-circuit to zero; m = 3, 4
/// use closed forms, m = 5, 6 too when both inputs are secondary; everything
/// else goes through Hilbert functions.
inline metric_value evaluate(const contact_structure& a, const contact_structure& b, std::uint64_t m,
                             const metric_options& options = {}) {
    detail::require_same_length(a, b);
    detail::require_metric_index(m, options);
    metric_value v{0, 0, m, a.length()};
    if (a == b) {
        return v;
    }
    const big_int norm = normalizer(a.length(), m);
    const bool both_secondary = is_secondary(a) && is_secondary(b);
    std::optional<rational> closed;
    if (!options.force_hilbert) {
        if (m == 3) {
            closed = rational(d3_closed(a, b));
        } else if (m == 4) {
            closed = both_secondary ? d4_closed_rna(a, b) : d4_closed_general(a, b);
        } else if (m == 5 && both_secondary) {
            closed = d5_closed_rna(a, b);
        } else if (m == 6 && both_secondary) {
            closed = d6_closed_rna(a, b);
        }
    }
    if (closed) {
        const rational raw = *closed * norm;
        if (denominator(raw) != 1) {
            throw std::logic_error("closed form produced a non-integral raw distance");
        }
        v.raw = numerator(raw);
        v.normalized = *closed;
    } else {
        v.raw = d_prime(a, b, m, options);
        v.normalized = rational(v.raw, norm);
    }
    return v;
}

inline rational d(const contact_structure& a, const contact_structure& b, std::uint64_t m,
                  const metric_options& options = {}) {
    return evaluate(a, b, m, options).normalized;
}

// ---------------------------------------------------------------------------
// The correction terms of d4 counted directly by membership pattern.

namespace detail {
struct membership {
    const contact_structure& first;
    const contact_structure& second;
    [[nodiscard]] bool in1(const contact& c) const { return first.contains(c); }
    [[nodiscard]] bool in2(const contact& c) const { return second.contains(c); }
    [[nodiscard]] bool only1(const contact& c) const { return in1(c) && !in2(c); }
    [[nodiscard]] bool only2(const contact& c) const { return in2(c) && !in1(c); }
};
} // namespace detail

/// 2A(Γ1∪Γ2) - A(Γ1) - A(Γ2): angles lying inside one Q_s but not the other
/// count once; angles with one contact only in Q1 and the other only in Q2
/// count twice.
inline std::size_t angle_cross_term(const contact_structure& a, const contact_structure& b) {
    const auto joined = union_of(a, b);
    const detail::membership mem{a, b};
    const auto& cs = joined.contacts();
    std::size_t total = 0;
    for (std::size_t x = 0; x < cs.size(); ++x) {
        for (std::size_t y = x + 1; y < cs.size(); ++y) {
            const auto& e = cs[x];
            const auto& f = cs[y];
            if (!e.shares_node(f)) {
                continue;
            }
            const bool all1 = mem.in1(e) && mem.in1(f);
            const bool all2 = mem.in2(e) && mem.in2(f);
            if (all1 != all2) {
                total += 1;
            }
            if ((mem.only1(e) && mem.only2(f)) || (mem.only2(e) && mem.only1(f))) {
                total += 2;
            }
        }
    }
    return total;
}

/// 2T(Γ1∪Γ2) - T(Γ1) - T(Γ2): triangles inside one Q_s but not the other
/// count once; triangles with two sides in some Q_s and the third only in
/// the other count twice, unless all three sides also lie in that other Q_t
/// (then the triangle was already counted once).
inline std::size_t triangle_cross_term(const contact_structure& a, const contact_structure& b) {
    const auto joined = union_of(a, b);
    const detail::membership mem{a, b};
    const auto adj = joined.adjacency();
    std::size_t total = 0;
    for (const auto& c : joined.contacts()) {
        for (auto k : adj[c.i]) {
            if (k <= c.j || !std::binary_search(adj[c.j].begin(), adj[c.j].end(), k)) {
                continue;
            }
            const contact sides[3] = {c, {c.i, k}, {c.j, k}};
            const bool all1 = std::all_of(std::begin(sides), std::end(sides), [&](auto& e) { return mem.in1(e); });
            const bool all2 = std::all_of(std::begin(sides), std::end(sides), [&](auto& e) { return mem.in2(e); });
            if (all1 != all2) {
                total += 1;
            }
            for (int odd = 0; odd < 3; ++odd) {
                const auto& p = sides[(odd + 1) % 3];
                const auto& q = sides[(odd + 2) % 3];
                const bool two_in_1 = mem.in1(p) && mem.in1(q) && mem.only2(sides[odd]) && !all2;
                const bool two_in_2 = mem.in2(p) && mem.in2(q) && mem.only1(sides[odd]) && !all1;
                if (two_in_1 || two_in_2) {
                    total += 2;
                    break;
                }
            }
        }
    }
    return total;
}

/// For secondary pairs with the same one-sided differences, checks that
/// d5(a, b) < d5(a2, b2) exactly when a, b share more contacts.
inline bool shared_contact_monotonicity_check(const contact_structure& a, const contact_structure& b,
                                              const contact_structure& a2, const contact_structure& b2) {
    detail::require_same_length(a, b);
    detail::require_same_length(a, a2);
    detail::require_same_length(a, b2);
    for (const auto* s : {&a, &b, &a2, &b2}) {
        if (!is_secondary(*s)) {
            throw error(errc::precondition_violated, "all four structures must be secondary");
        }
    }
    if (contacts_only_in(a, b) != contacts_only_in(a2, b2) || contacts_only_in(b, a) != contacts_only_in(b2, a2)) {
        throw error(errc::precondition_violated, "the one-sided contact differences must coincide");
    }
    const bool closer = d5_closed_rna(a, b) < d5_closed_rna(a2, b2);
    const bool shares_more = common_contacts(a, b).size() > common_contacts(a2, b2).size();
    return closer == shares_more;
}

} // namespace edgemetric
