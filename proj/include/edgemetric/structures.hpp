#pragma once

#include "error.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edgemetric {

using node_t = std::uint32_t;

/// An unordered node pair, stored canonically with i < j (1-based).
struct contact {
    node_t i = 0;
    node_t j = 0;

    [[nodiscard]] bool touches(node_t v) const noexcept { return i == v || j == v; }
    [[nodiscard]] bool shares_node(const contact& other) const noexcept {
        return touches(other.i) || touches(other.j);
    }

    friend auto operator<=>(const contact&, const contact&) = default;
};

enum class structure_kind { arbitrary, secondary };

class contact_structure;
contact_structure validate(std::size_t n, std::span<const std::pair<std::int64_t, std::int64_t>> pairs,
                           structure_kind required = structure_kind::arbitrary);

/// A contact structure of fixed length n: a loop-free graph on nodes 1..n
/// with no contact between consecutive nodes. Immutable once built; contacts
/// are kept sorted lexicographically and free of duplicates.
class contact_structure {
public:
    static contact_structure empty(std::size_t n) {
        if (n < 3) {
            throw error(errc::invalid_length, "length must be at least 3, got " + std::to_string(n));
        }
        return contact_structure(n, {});
    }

    [[nodiscard]] std::size_t length() const noexcept { return n_; }
    [[nodiscard]] const std::vector<contact>& contacts() const noexcept { return contacts_; }
    [[nodiscard]] std::size_t size() const noexcept { return contacts_.size(); }
    [[nodiscard]] bool has_contacts() const noexcept { return !contacts_.empty(); }

    [[nodiscard]] bool contains(const contact& c) const {
        return std::binary_search(contacts_.begin(), contacts_.end(), c);
    }

    /// Number of contacts at each node, indexed 1..n (slot 0 unused).
    [[nodiscard]] std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> deg(n_ + 1, 0);
        for (const auto& c : contacts_) {
            ++deg[c.i];
            ++deg[c.j];
        }
        return deg;
    }

    /// Neighbour lists indexed 1..n, each sorted ascending.
    [[nodiscard]] std::vector<std::vector<node_t>> adjacency() const {
        std::vector<std::vector<node_t>> adj(n_ + 1);
        for (const auto& c : contacts_) {
            adj[c.i].push_back(c.j);
            adj[c.j].push_back(c.i);
        }
        for (auto& list : adj) {
            std::sort(list.begin(), list.end());
        }
        return adj;
    }

    friend bool operator==(const contact_structure&, const contact_structure&) = default;

private:
    contact_structure(std::size_t n, std::vector<contact> sorted) : n_(n), contacts_(std::move(sorted)) {}

    friend contact_structure validate(std::size_t, std::span<const std::pair<std::int64_t, std::int64_t>>,
                                      structure_kind);
    friend contact_structure union_of(const contact_structure&, const contact_structure&);

    std::size_t n_ = 0;
    std::vector<contact> contacts_;
};

/// Builds a canonical structure from node pairs given in any order and
/// orientation. Secondary additionally enforces unique bonds.
inline contact_structure validate(std::size_t n, std::span<const std::pair<std::int64_t, std::int64_t>> pairs,
                                  structure_kind required) {
    if (n < 3) {
        throw error(errc::invalid_length, "length must be at least 3, got " + std::to_string(n));
    }
    std::vector<contact> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        const auto label = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (a < 1 || b < 1 || a > static_cast<std::int64_t>(n) || b > static_cast<std::int64_t>(n)) {
            throw error(errc::index_out_of_range, "pair " + label + " outside [1," + std::to_string(n) + "]");
        }
        if (a == b) {
            throw error(errc::self_loop, "pair " + label);
        }
        if (a > b) {
            std::swap(a, b);
        }
        if (b == a + 1) {
            throw error(errc::consecutive_contact, "pair " + label + " joins consecutive nodes");
        }
        out.push_back({static_cast<node_t>(a), static_cast<node_t>(b)});
    }
    std::sort(out.begin(), out.end());
    if (auto dup = std::adjacent_find(out.begin(), out.end()); dup != out.end()) {
        throw error(errc::duplicate_contact,
                    "contact " + std::to_string(dup->i) + "-" + std::to_string(dup->j) + " listed twice");
    }
    if (required == structure_kind::secondary) {
        std::vector<bool> used(n + 1, false);
        for (const auto& c : out) {
            for (node_t v : {c.i, c.j}) {
                if (used[v]) {
                    throw error(errc::unique_bonds_violated, "node " + std::to_string(v) + " in two contacts");
                }
                used[v] = true;
            }
        }
    }
    return contact_structure(n, std::move(out));
}

inline contact_structure validate(std::size_t n, std::initializer_list<std::pair<std::int64_t, std::int64_t>> pairs,
                                  structure_kind required = structure_kind::arbitrary) {
    return validate(n, std::span(pairs.begin(), pairs.size()), required);
}

inline contact_structure validate(std::size_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                                  structure_kind required = structure_kind::arbitrary) {
    return validate(n, std::span(pairs), required);
}

/// True iff no node occurs in two contacts (unique bonds).
inline bool is_secondary(const contact_structure& s) {
    const auto deg = s.degrees();
    return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d <= 1; });
}

namespace detail {
inline void require_same_length(const contact_structure& a, const contact_structure& b) {
    if (a.length() != b.length()) {
        throw error(errc::length_mismatch,
                    "lengths " + std::to_string(a.length()) + " and " + std::to_string(b.length()));
    }
}
} // namespace detail

/// The structure on the same nodes carrying Q1 ∪ Q2. May violate unique
/// bonds even when both inputs are secondary.
inline contact_structure union_of(const contact_structure& a, const contact_structure& b) {
    detail::require_same_length(a, b);
    std::vector<contact> merged;
    merged.reserve(a.size() + b.size());
    std::set_union(a.contacts().begin(), a.contacts().end(), b.contacts().begin(), b.contacts().end(),
                   std::back_inserter(merged));
    return contact_structure(a.length(), std::move(merged));
}

inline std::vector<contact> common_contacts(const contact_structure& a, const contact_structure& b) {
    detail::require_same_length(a, b);
    std::vector<contact> out;
    std::set_intersection(a.contacts().begin(), a.contacts().end(), b.contacts().begin(), b.contacts().end(),
                          std::back_inserter(out));
    return out;
}

/// Contacts of `a` missing from `b`.
inline std::vector<contact> contacts_only_in(const contact_structure& a, const contact_structure& b) {
    detail::require_same_length(a, b);
    std::vector<contact> out;
    std::set_difference(a.contacts().begin(), a.contacts().end(), b.contacts().begin(), b.contacts().end(),
                        std::back_inserter(out));
    return out;
}

/// |Q1 Δ Q2|.
inline std::size_t symmetric_difference_count(const contact_structure& a, const contact_structure& b) {
    detail::require_same_length(a, b);
    return a.size() + b.size() - 2 * common_contacts(a, b).size();
}

/// Unordered pairs of distinct contacts sharing exactly one node. Two distinct
/// contacts share at most one node, so this is the sum of binom(deg, 2).
inline std::size_t angle_count(const contact_structure& s) {
    std::size_t total = 0;
    for (auto d : s.degrees()) {
        if (d >= 2) {
            total += d * (d - 1) / 2;
        }
    }
    return total;
}

/// Node triples carrying all three contacts.
inline std::size_t triangle_count(const contact_structure& s) {
    const auto adj = s.adjacency();
    std::size_t total = 0;
    for (const auto& c : s.contacts()) {
        // count k > j adjacent to both ends, so each triangle i<j<k is seen once
        const auto& ni = adj[c.i];
        const auto& nj = adj[c.j];
        auto it = std::upper_bound(ni.begin(), ni.end(), c.j);
        for (; it != ni.end(); ++it) {
            if (std::binary_search(nj.begin(), nj.end(), *it)) {
                ++total;
            }
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Pair-list text format: `n: i-j, i-j, ...`; `n:` alone is the empty
// structure. Whitespace is ignored and `#` starts a comment.

namespace detail {
inline std::string strip_comment_and_space(std::string_view text) {
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
        text = text.substr(0, hash);
    }
    std::string out;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t' && ch != '\r' && ch != '\n') {
            out.push_back(ch);
        }
    }
    return out;
}

inline std::int64_t parse_index(std::string_view token, std::string_view context) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw error(errc::parse_error, "bad integer '" + std::string(token) + "' in '" + std::string(context) + "'");
    }
    return value;
}
} // namespace detail

inline contact_structure parse_pair_list(std::string_view text, structure_kind required = structure_kind::arbitrary) {
    const std::string body = detail::strip_comment_and_space(text);
    const auto colon = body.find(':');
    if (colon == std::string::npos) {
        throw error(errc::parse_error, "missing ':' in '" + std::string(text) + "'");
    }
    const auto n = detail::parse_index(std::string_view(body).substr(0, colon), text);
    if (n < 3) {
        throw error(errc::invalid_length, "length must be at least 3, got " + std::to_string(n));
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    std::string_view rest = std::string_view(body).substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            throw error(errc::parse_error, "expected i-j, got '" + std::string(item) + "'");
        }
        pairs.emplace_back(detail::parse_index(item.substr(0, dash), text),
                           detail::parse_index(item.substr(dash + 1), text));
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
        if (rest.empty()) {
            throw error(errc::parse_error, "trailing ',' in '" + std::string(text) + "'");
        }
    }
    return validate(static_cast<std::size_t>(n), pairs, required);
}

inline std::string to_pair_list(const contact_structure& s) {
    std::string out = std::to_string(s.length()) + ":";
    bool first = true;
    for (const auto& c : s.contacts()) {
        out += first ? " " : ", ";
        out += std::to_string(c.i) + "-" + std::to_string(c.j);
        first = false;
    }
    return out;
}

} // namespace edgemetric
