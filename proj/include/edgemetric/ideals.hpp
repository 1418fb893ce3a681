#pragma once

#include "arith.hpp"
#include "error.hpp"
#include "structures.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace edgemetric {

/// A monomial x_1^a_1 ... x_n^a_n stored sparsely as (variable, exponent)
/// terms sorted by variable; zero exponents are never stored, and the empty
/// term list is the monomial 1.
class monomial {
public:
    using term = std::pair<std::uint32_t, std::uint32_t>;

    monomial() = default;

    explicit monomial(std::vector<term> terms) {
        std::sort(terms.begin(), terms.end());
        for (const auto& [var, exp] : terms) {
            if (var == 0) {
                throw error(errc::index_out_of_range, "variables are numbered from 1");
            }
            if (exp == 0) {
                continue;
            }
            if (!terms_.empty() && terms_.back().first == var) {
                terms_.back().second += exp;
            } else {
                terms_.emplace_back(var, exp);
            }
        }
    }

    /// `dense[v-1]` is the exponent of x_v.
    static monomial from_exponents(std::span<const std::uint32_t> dense) {
        monomial m;
        for (std::size_t v = 0; v < dense.size(); ++v) {
            if (dense[v] != 0) {
                m.terms_.emplace_back(static_cast<std::uint32_t>(v + 1), dense[v]);
            }
        }
        return m;
    }

    /// x_i * x_j * ... for distinct variables.
    static monomial product_of(std::initializer_list<std::uint32_t> vars) {
        std::vector<term> terms;
        for (auto v : vars) {
            terms.emplace_back(v, 1);
        }
        return monomial(std::move(terms));
    }

    [[nodiscard]] const std::vector<term>& terms() const noexcept { return terms_; }

    [[nodiscard]] std::uint64_t degree() const noexcept {
        std::uint64_t d = 0;
        for (const auto& t : terms_) {
            d += t.second;
        }
        return d;
    }

    [[nodiscard]] std::uint32_t exponent(std::uint32_t var) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), term{var, 0});
        return (it != terms_.end() && it->first == var) ? it->second : 0;
    }

    [[nodiscard]] std::uint32_t max_variable() const noexcept { return terms_.empty() ? 0 : terms_.back().first; }

    [[nodiscard]] bool is_square_free() const noexcept {
        return std::all_of(terms_.begin(), terms_.end(), [](const term& t) { return t.second == 1; });
    }

    /// The square-free monomial with the same support.
    [[nodiscard]] monomial support() const {
        monomial m;
        for (const auto& t : terms_) {
            m.terms_.emplace_back(t.first, 1);
        }
        return m;
    }

    [[nodiscard]] bool divides(const monomial& other) const {
        auto it = other.terms_.begin();
        for (const auto& [var, exp] : terms_) {
            while (it != other.terms_.end() && it->first < var) {
                ++it;
            }
            if (it == other.terms_.end() || it->first != var || it->second < exp) {
                return false;
            }
        }
        return true;
    }

    /// Divisibility test against a dense exponent vector (`dense[v-1]`).
    [[nodiscard]] bool divides(std::span<const std::uint32_t> dense) const {
        return std::all_of(terms_.begin(), terms_.end(), [&](const term& t) {
            return t.first <= dense.size() && dense[t.first - 1] >= t.second;
        });
    }

    friend monomial lcm(const monomial& a, const monomial& b) {
        monomial m;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                m.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                m.terms_.push_back(*ib++);
            } else {
                m.terms_.emplace_back(ia->first, std::max(ia->second, ib->second));
                ++ia;
                ++ib;
            }
        }
        return m;
    }

    /// `x1^2*x3`; the unit monomial prints as `1`.
    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) {
            return "1";
        }
        std::string out;
        for (const auto& [var, exp] : terms_) {
            if (!out.empty()) {
                out += '*';
            }
            out += "x" + std::to_string(var);
            if (exp > 1) {
                out += "^" + std::to_string(exp);
            }
        }
        return out;
    }

    friend auto operator<=>(const monomial&, const monomial&) = default;
    friend bool operator==(const monomial&, const monomial&) = default;

private:
    std::vector<term> terms_;
};

/// A monomial ideal over x_1..x_n held by its minimal generating set. The
/// zero ideal has no generators.
class monomial_ideal {
public:
    explicit monomial_ideal(std::size_t n, std::vector<monomial> generators = {}) : n_(n) {
        for (const auto& g : generators) {
            if (g.max_variable() > n) {
                throw error(errc::dimension_mismatch,
                            "generator " + g.to_string() + " uses a variable beyond x" + std::to_string(n));
            }
        }
        // shortest first, so a kept generator is never divisible by a later one
        std::sort(generators.begin(), generators.end(), [](const monomial& a, const monomial& b) {
            const auto da = a.degree();
            const auto db = b.degree();
            return da != db ? da < db : a < b;
        });
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        for (auto& g : generators) {
            const bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const monomial& h) { return h.divides(g); });
            if (!redundant) {
                gens_.push_back(std::move(g));
            }
        }
        std::sort(gens_.begin(), gens_.end());
    }

    [[nodiscard]] std::size_t variables() const noexcept { return n_; }
    [[nodiscard]] const std::vector<monomial>& generators() const noexcept { return gens_; }
    [[nodiscard]] bool is_zero() const noexcept { return gens_.empty(); }

    [[nodiscard]] bool contains(const monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const monomial& g) { return g.divides(m); });
    }
    [[nodiscard]] bool contains(std::span<const std::uint32_t> dense) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const monomial& g) { return g.divides(dense); });
    }

    [[nodiscard]] std::string to_string() const {
        std::string out = "<";
        for (std::size_t k = 0; k < gens_.size(); ++k) {
            out += (k ? ", " : "") + gens_[k].to_string();
        }
        return out + ">";
    }

    friend bool operator==(const monomial_ideal&, const monomial_ideal&) = default;

private:
    std::size_t n_ = 0;
    std::vector<monomial> gens_;
};

inline bool contains(const monomial_ideal& ideal, const monomial& m) { return ideal.contains(m); }

/// The ideal generated by x_i x_j for every contact i·j.
inline monomial_ideal edge_ideal(const contact_structure& s) {
    std::vector<monomial> gens;
    gens.reserve(s.size());
    for (const auto& c : s.contacts()) {
        gens.push_back(monomial::product_of({c.i, c.j}));
    }
    return monomial_ideal(s.length(), std::move(gens));
}

namespace detail {
inline void require_same_variables(const monomial_ideal& a, const monomial_ideal& b) {
    if (a.variables() != b.variables()) {
        throw error(errc::dimension_mismatch, "ideals over " + std::to_string(a.variables()) + " and " +
                                                  std::to_string(b.variables()) + " variables");
    }
}
} // namespace detail

inline monomial_ideal ideal_sum(const monomial_ideal& a, const monomial_ideal& b) {
    detail::require_same_variables(a, b);
    std::vector<monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return monomial_ideal(a.variables(), std::move(gens));
}

/// Minimal generators of a ∩ b: pairwise lcms, minimalized.
inline monomial_ideal intersection_generators(const monomial_ideal& a, const monomial_ideal& b) {
    detail::require_same_variables(a, b);
    std::vector<monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& g : a.generators()) {
        for (const auto& h : b.generators()) {
            gens.push_back(lcm(g, h));
        }
    }
    return monomial_ideal(a.variables(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

struct enumeration_budget {
    std::uint64_t max_monomials = 5'000'000;

    /// Throws unless every monomial of degree <= max_degree in n variables fits.
    void require(std::size_t n, std::uint64_t max_degree) const {
        const big_int needed = binom(static_cast<std::int64_t>(n + max_degree), static_cast<std::int64_t>(n));
        if (needed > max_monomials) {
            throw error(errc::budget_exceeded, "enumerating degree <= " + std::to_string(max_degree) + " over " +
                                                   std::to_string(n) + " variables needs " + needed.str() +
                                                   " monomials, budget " + std::to_string(max_monomials));
        }
    }
};

/// Calls f(dense, degree) for every monomial of total degree <= max_degree
/// in n variables, where dense[v-1] is the exponent of x_v.
template <class F>
void for_each_monomial(std::size_t n, std::uint64_t max_degree, F&& f) {
    std::vector<std::uint32_t> exps(n, 0);
    // depth-first over variables, distributing the remaining degree
    auto rec = [&](auto&& self, std::size_t var, std::uint64_t used) -> void {
        if (var == n) {
            f(std::span<const std::uint32_t>(exps), used);
            return;
        }
        for (std::uint64_t e = 0; used + e <= max_degree; ++e) {
            exps[var] = static_cast<std::uint32_t>(e);
            self(self, var + 1, used + e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, 0);
}

/// M(I)_d: members of the ideal with total degree <= max_degree.
inline std::set<monomial> enumerate_members(const monomial_ideal& ideal, std::uint64_t max_degree,
                                            const enumeration_budget& budget = {}) {
    budget.require(ideal.variables(), max_degree);
    std::set<monomial> out;
    if (ideal.is_zero()) {
        return out;
    }
    for_each_monomial(ideal.variables(), max_degree, [&](std::span<const std::uint32_t> dense, std::uint64_t) {
        if (ideal.contains(dense)) {
            out.insert(monomial::from_exponents(dense));
        }
    });
    return out;
}

// ---------------------------------------------------------------------------
// Square-free counting

namespace detail {

using truncated_poly = std::vector<big_int>;

inline truncated_poly multiply(const truncated_poly& a, const truncated_poly& b, std::size_t max_k) {
    truncated_poly out(std::min(max_k + 1, a.size() + b.size() - 1), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// Independence polynomial of a graph, truncated at degree max_k. Splits
/// into connected components, then branches on a maximum-degree vertex v:
/// P(G) = P(G - v) + x * P(G - N[v]). Components are memoized by vertex set.
class independence_counter {
public:
    independence_counter(std::vector<std::vector<node_t>> adjacency, std::size_t max_k)
        : adj_(std::move(adjacency)), max_k_(max_k), mark_(adj_.size(), 0) {}

    truncated_poly count(const std::vector<node_t>& vertices) {
        truncated_poly total{1};
        for (const auto& component : components(vertices)) {
            total = multiply(total, count_connected(component), max_k_);
        }
        return total;
    }

private:
    std::vector<std::vector<node_t>> components(const std::vector<node_t>& vertices) {
        const std::uint32_t in_set = ++stamp_;
        for (auto v : vertices) {
            mark_[v] = in_set;
        }
        const std::uint32_t seen = ++stamp_;
        std::vector<std::vector<node_t>> out;
        for (auto start : vertices) {
            if (mark_[start] != in_set) {
                continue;
            }
            auto& comp = out.emplace_back();
            std::vector<node_t> stack{start};
            mark_[start] = seen;
            while (!stack.empty()) {
                const auto v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (auto w : adj_[v]) {
                    if (mark_[w] == in_set) {
                        mark_[w] = seen;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
        }
        return out;
    }

    truncated_poly count_connected(const std::vector<node_t>& comp) {
        if (comp.size() == 1) {
            return max_k_ >= 1 ? truncated_poly{1, 1} : truncated_poly{1};
        }
        if (auto it = memo_.find(comp); it != memo_.end()) {
            return it->second;
        }
        node_t pivot = comp.front();
        std::size_t best = 0;
        for (auto v : comp) {
            const auto d = inside_degree(v, comp);
            if (d > best) {
                best = d;
                pivot = v;
            }
        }
        std::vector<node_t> without;
        std::vector<node_t> outside_closed;
        for (auto v : comp) {
            if (v == pivot) {
                continue;
            }
            without.push_back(v);
            if (!std::binary_search(adj_[pivot].begin(), adj_[pivot].end(), v)) {
                outside_closed.push_back(v);
            }
        }
        truncated_poly result = count(without);
        const truncated_poly with_pivot = count(outside_closed);
        if (result.size() < std::min(max_k_ + 1, with_pivot.size() + 1)) {
            result.resize(std::min(max_k_ + 1, with_pivot.size() + 1), 0);
        }
        for (std::size_t k = 0; k + 1 < result.size() && k < with_pivot.size(); ++k) {
            result[k + 1] += with_pivot[k];
        }
        memo_.emplace(comp, result);
        return result;
    }

    std::size_t inside_degree(node_t v, const std::vector<node_t>& comp) const {
        return static_cast<std::size_t>(std::count_if(adj_[v].begin(), adj_[v].end(), [&](node_t w) {
            return std::binary_search(comp.begin(), comp.end(), w);
        }));
    }

    std::vector<std::vector<node_t>> adj_;
    std::size_t max_k_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    std::map<std::vector<node_t>, truncated_poly> memo_;
};

} // namespace detail

/// Number of k-subsets of the nodes spanning no contact, for k = 0..max_k.
inline std::vector<big_int> independent_set_counts(const contact_structure& s, std::size_t max_k) {
    std::vector<node_t> all(s.length());
    for (std::size_t v = 0; v < all.size(); ++v) {
        all[v] = static_cast<node_t>(v + 1);
    }
    detail::independence_counter counter(s.adjacency(), max_k);
    auto poly = counter.count(all);
    poly.resize(max_k + 1, 0);
    return poly;
}

/// SF_k(I_Γ) for k = 0..max_k: square-free members of degree k, i.e.
/// k-subsets that are not independent in the contact graph.
inline std::vector<big_int> sf_counts(const contact_structure& s, std::size_t max_k) {
    auto counts = independent_set_counts(s, max_k);
    for (std::size_t k = 0; k <= max_k; ++k) {
        counts[k] = binom(static_cast<std::int64_t>(s.length()), static_cast<std::int64_t>(k)) - counts[k];
    }
    return counts;
}

inline big_int sf_count(const contact_structure& s, std::size_t k) { return sf_counts(s, k)[k]; }

} // namespace edgemetric
