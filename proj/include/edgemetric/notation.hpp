#pragma once

#include "error.hpp"
#include "structures.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edgemetric {

/// Ordered bracket pairs for dot-bracket text. Page p of a pseudoknotted
/// structure is written with pair p; `.` marks an isolated node.
class bracket_alphabet {
public:
    /// `()`, `[]`, `{}`, `<>`, then `Aa` … `Zz`.
    bracket_alphabet() {
        pairs_ = {{'(', ')'}, {'[', ']'}, {'{', '}'}, {'<', '>'}};
        for (char c = 'A'; c <= 'Z'; ++c) {
            pairs_.emplace_back(c, static_cast<char>(c - 'A' + 'a'));
        }
        index_lookup();
    }

    explicit bracket_alphabet(std::vector<std::pair<char, char>> pairs) : pairs_(std::move(pairs)) {
        index_lookup();
    }

    [[nodiscard]] std::size_t size() const noexcept { return pairs_.size(); }
    [[nodiscard]] const std::pair<char, char>& operator[](std::size_t page) const { return pairs_[page]; }

    /// Page whose opening character is `ch`, if any.
    [[nodiscard]] std::optional<std::size_t> opening(char ch) const { return lookup(open_, ch); }
    [[nodiscard]] std::optional<std::size_t> closing(char ch) const { return lookup(close_, ch); }

private:
    static std::optional<std::size_t> lookup(const std::array<int, 256>& table, char ch) {
        const int page = table[static_cast<unsigned char>(ch)];
        if (page < 0) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(page);
    }

    void index_lookup() {
        open_.fill(-1);
        close_.fill(-1);
        std::array<bool, 256> seen{};
        seen[static_cast<unsigned char>('.')] = true;
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            for (char ch : {pairs_[p].first, pairs_[p].second}) {
                auto& slot = seen[static_cast<unsigned char>(ch)];
                if (slot) {
                    throw error(errc::precondition_violated,
                                std::string("bracket character '") + ch + "' reused or reserved");
                }
                slot = true;
            }
            open_[static_cast<unsigned char>(pairs_[p].first)] = static_cast<int>(p);
            close_[static_cast<unsigned char>(pairs_[p].second)] = static_cast<int>(p);
        }
    }

    std::vector<std::pair<char, char>> pairs_;
    std::array<int, 256> open_{};
    std::array<int, 256> close_{};
};

/// Parses dot-bracket text with one stack per bracket type, so differently
/// typed brackets may interleave (pseudoknots). The result is secondary.
inline contact_structure parse_dotbracket(std::string_view text, const bracket_alphabet& alphabet = {}) {
    if (text.empty()) {
        throw error(errc::parse_error, "empty dot-bracket string");
    }
    std::vector<std::vector<std::int64_t>> stacks(alphabet.size());
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const char ch = text[pos];
        const auto node = static_cast<std::int64_t>(pos + 1);
        if (ch == '.') {
            continue;
        }
        if (auto page = alphabet.opening(ch)) {
            stacks[*page].push_back(node);
        } else if (auto close = alphabet.closing(ch)) {
            auto& stack = stacks[*close];
            if (stack.empty()) {
                throw error(errc::unbalanced_bracket,
                            std::string("unmatched '") + ch + "' at position " + std::to_string(node));
            }
            pairs.emplace_back(stack.back(), node);
            stack.pop_back();
        } else {
            throw error(errc::invalid_character,
                        std::string("'") + ch + "' at position " + std::to_string(node));
        }
    }
    for (std::size_t p = 0; p < stacks.size(); ++p) {
        if (!stacks[p].empty()) {
            throw error(errc::unbalanced_bracket, std::string("unmatched '") + alphabet[p].first +
                                                      "' at position " + std::to_string(stacks[p].back()));
        }
    }
    return validate(text.size(), pairs, structure_kind::secondary);
}

namespace detail {
inline bool crossing(const contact& a, const contact& b) {
    return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}
} // namespace detail

/// Greedy first-fit page assignment over contacts sorted by opening
/// position: each contact takes the first bracket type none of whose
/// contacts it crosses. Non-crossing structures use only `()`.
inline std::string to_dotbracket(const contact_structure& s, const bracket_alphabet& alphabet = {}) {
    if (!is_secondary(s)) {
        throw error(errc::not_secondary, "dot-bracket needs unique bonds");
    }
    std::vector<std::vector<contact>> pages;
    std::string out(s.length(), '.');
    for (const auto& c : s.contacts()) {
        std::size_t page = 0;
        while (page < pages.size() &&
               std::any_of(pages[page].begin(), pages[page].end(),
                           [&](const contact& other) { return detail::crossing(c, other); })) {
            ++page;
        }
        if (page == pages.size()) {
            if (page == alphabet.size()) {
                throw error(errc::alphabet_exhausted,
                            "needs more than " + std::to_string(alphabet.size()) + " bracket types");
            }
            pages.emplace_back();
        }
        pages[page].push_back(c);
        out[c.i - 1] = alphabet[page].first;
        out[c.j - 1] = alphabet[page].second;
    }
    return out;
}

} // namespace edgemetric
