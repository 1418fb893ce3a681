#pragma once

#include "error.hpp"
#include "notation.hpp"
#include "structures.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace edgemetric {

enum class input_format { dotbracket, pairs };

/// Parses one structure. Dot-bracket input is always secondary; pair lists
/// may be arbitrary contact structures.
inline contact_structure parse_structure(std::string_view text, input_format format,
                                         const bracket_alphabet& alphabet = {}) {
    if (format == input_format::pairs) {
        return parse_pair_list(text, structure_kind::arbitrary);
    }
    return parse_dotbracket(text, alphabet);
}

inline std::string format_structure(const contact_structure& s, input_format format,
                                    const bracket_alphabet& alphabet = {}) {
    return format == input_format::pairs ? to_pair_list(s) : to_dotbracket(s, alphabet);
}

/// One structure per line; blank lines and `#` comments are skipped. For
/// dot-bracket only the first token counts, so energy columns may follow.
/// All structures must share one length.
inline std::vector<contact_structure> read_ensemble(std::istream& in, input_format format,
                                                   const bracket_alphabet& alphabet = {}) {
    std::vector<contact_structure> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        const auto first = view.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            continue;
        }
        view.remove_prefix(first);
        if (format == input_format::dotbracket) {
            view = view.substr(0, view.find_first_of(" \t\r"));
        }
        try {
            out.push_back(parse_structure(view, format, alphabet));
        } catch (const error& e) {
            throw error(e.code(), "line " + std::to_string(line_no) + ": " + e.detail());
        }
        if (out.back().length() != out.front().length()) {
            throw error(errc::heterogeneous_lengths,
                        "line " + std::to_string(line_no) + " has length " + std::to_string(out.back().length()) +
                            ", expected " + std::to_string(out.front().length()));
        }
    }
    return out;
}

} // namespace edgemetric
