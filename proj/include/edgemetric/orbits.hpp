#pragma once

#include "error.hpp"
#include "structures.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgemetric {

enum class orbit_kind { linear, cyclic };

inline const char* to_string(orbit_kind kind) { return kind == orbit_kind::linear ? "linear" : "cyclic"; }

/// A connected component of Γ1 ∪ Γ2, listed in traversal order: consecutive
/// nodes are joined by a contact, and for cyclic orbits so are last and first.
struct orbit {
    std::vector<node_t> nodes;
    orbit_kind kind = orbit_kind::linear;

    [[nodiscard]] std::size_t length() const noexcept { return nodes.size(); }
    [[nodiscard]] bool trivial() const noexcept { return nodes.size() == 1; }
};

/// Orbit length histograms: Λ^(m) (linear) and Θ^(m) (cyclic).
struct orbit_stats {
    std::map<std::size_t, std::size_t> lambda;
    std::map<std::size_t, std::size_t> theta;

    [[nodiscard]] std::size_t linear(std::size_t m) const {
        auto it = lambda.find(m);
        return it == lambda.end() ? 0 : it->second;
    }
    [[nodiscard]] std::size_t cyclic(std::size_t m) const {
        auto it = theta.find(m);
        return it == theta.end() ? 0 : it->second;
    }
    /// Λ_{≥k}: linear orbits of length at least k.
    [[nodiscard]] std::size_t lambda_geq(std::size_t k) const {
        std::size_t total = 0;
        for (auto it = lambda.lower_bound(k); it != lambda.end(); ++it) {
            total += it->second;
        }
        return total;
    }
    [[nodiscard]] std::size_t node_count() const {
        std::size_t total = 0;
        for (const auto& [m, count] : lambda) total += m * count;
        for (const auto& [m, count] : theta) total += m * count;
        return total;
    }
    /// Σ_{m≥4} m Θ^(m) + Σ_{m≥2} (m-1) Λ^(m), which equals |Q1 Δ Q2|.
    [[nodiscard]] std::size_t differing_contacts() const {
        std::size_t total = 0;
        for (const auto& [m, count] : theta) {
            if (m >= 4) total += m * count;
        }
        for (const auto& [m, count] : lambda) {
            if (m >= 2) total += (m - 1) * count;
        }
        return total;
    }
};

struct orbit_decomposition {
    std::vector<orbit> orbits;
    orbit_stats stats;
};

namespace detail {
inline void require_secondary_pair(const contact_structure& a, const contact_structure& b) {
    require_same_length(a, b);
    if (!is_secondary(a) || !is_secondary(b)) {
        throw error(errc::not_secondary, "orbit statistics need two secondary structures");
    }
}
} // namespace detail

/// Splits Γ1 ∪ Γ2 of two secondary structures into paths and even cycles.
/// Orbits are ordered by smallest node; paths start at their smaller end
/// point, cycles at their smallest node towards its smaller neighbour.
inline orbit_decomposition decompose(const contact_structure& a, const contact_structure& b) {
    detail::require_secondary_pair(a, b);
    const auto joined = union_of(a, b);
    const auto adj = joined.adjacency();
    const auto shared = common_contacts(a, b);
    const std::size_t n = a.length();

    orbit_decomposition out;
    std::vector<bool> seen(n + 1, false);
    for (node_t v = 1; v <= n; ++v) {
        if (seen[v]) {
            continue;
        }
        // collect the component, then pick a start node
        std::vector<node_t> comp{v};
        seen[v] = true;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            for (auto w : adj[comp[k]]) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        std::size_t edges = 0;
        node_t start = 0;
        for (auto u : comp) {
            edges += adj[u].size();
            if (adj[u].size() <= 1 && (start == 0 || u < start)) {
                start = u;
            }
        }
        edges /= 2;
        const bool closed = edges == comp.size() && comp.size() >= 3;
        if (start == 0) {
            start = *std::min_element(comp.begin(), comp.end());
        }

        orbit o;
        o.nodes.push_back(start);
        node_t prev = 0;
        node_t cur = start;
        while (o.nodes.size() < comp.size()) {
            node_t next = 0;
            for (auto w : adj[cur]) {
                if (w != prev) {
                    next = w;
                    break;
                }
            }
            prev = cur;
            cur = next;
            o.nodes.push_back(cur);
        }
        if (closed) {
            o.kind = orbit_kind::cyclic;
        } else if (comp.size() == 2) {
            const contact c{std::min(comp[0], comp[1]), std::max(comp[0], comp[1])};
            o.kind = std::binary_search(shared.begin(), shared.end(), c) ? orbit_kind::cyclic : orbit_kind::linear;
        }
        if (o.kind == orbit_kind::cyclic && o.length() % 2 != 0) {
            throw std::logic_error("odd cycle in a union of two secondary structures");
        }
        auto& histogram = o.kind == orbit_kind::cyclic ? out.stats.theta : out.stats.lambda;
        ++histogram[o.length()];
        out.orbits.push_back(std::move(o));
    }

    if (out.stats.node_count() != n || out.stats.differing_contacts() != symmetric_difference_count(a, b)) {
        throw std::logic_error("orbit statistics violate the contact-count identity");
    }
    return out;
}

/// A_k for k >= 2: k-contact simple paths (k+1 distinct nodes) in Γ1 ∪ Γ2,
/// obtained from the orbit statistics as
/// |Q1 Δ Q2| - Σ_{m=4..k} m Θ^(m) - Σ_{i=2..k} Λ_{≥i}.
inline std::size_t a_k(const orbit_stats& stats, std::size_t k) {
    if (k < 2) {
        throw error(errc::precondition_violated, "A_k is defined for k >= 2");
    }
    std::size_t removed = 0;
    for (std::size_t m = 4; m <= k; ++m) {
        removed += m * stats.cyclic(m);
    }
    for (std::size_t i = 2; i <= k; ++i) {
        removed += stats.lambda_geq(i);
    }
    return stats.differing_contacts() - removed;
}

inline std::size_t a_k(const contact_structure& a, const contact_structure& b, std::size_t k) {
    return a_k(decompose(a, b).stats, k);
}

namespace detail {
/// Component label per node (1..n) of the contact graph.
inline std::vector<node_t> component_labels(const contact_structure& s) {
    std::vector<node_t> parent(s.length() + 1);
    std::iota(parent.begin(), parent.end(), node_t{0});
    auto find = [&](node_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& c : s.contacts()) {
        const auto ri = find(c.i);
        const auto rj = find(c.j);
        if (ri != rj) {
            parent[std::max(ri, rj)] = std::min(ri, rj);
        }
    }
    for (node_t v = 1; v <= s.length(); ++v) {
        parent[v] = find(v);
    }
    return parent;
}

inline bool contacts_connected_in(const contact_structure& from, const contact_structure& in) {
    const auto label = component_labels(in);
    return std::all_of(from.contacts().begin(), from.contacts().end(),
                       [&](const contact& c) { return label[c.i] == label[c.j]; });
}
} // namespace detail

/// True iff every contact of each structure joins two nodes connected by a
/// chain of contacts in the other; the zero set of the subgroup pseudometric.
inline bool sgr_indistinguishable(const contact_structure& a, const contact_structure& b) {
    detail::require_same_length(a, b);
    return detail::contacts_connected_in(a, b) && detail::contacts_connected_in(b, a);
}

} // namespace edgemetric
