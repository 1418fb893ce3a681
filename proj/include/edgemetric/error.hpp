#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edgemetric {

enum class errc {
    invalid_length,
    self_loop,
    consecutive_contact,
    index_out_of_range,
    duplicate_contact,
    unique_bonds_violated,
    length_mismatch,
    heterogeneous_lengths,
    parse_error,
    unbalanced_bracket,
    invalid_character,
    not_secondary,
    alphabet_exhausted,
    dimension_mismatch,
    budget_exceeded,
    invalid_metric_index,
    precondition_violated,
};

inline std::string_view to_string(errc code) {
    switch (code) {
    case errc::invalid_length: return "InvalidLength";
    case errc::self_loop: return "SelfLoop";
    case errc::consecutive_contact: return "ConsecutiveContact";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::duplicate_contact: return "DuplicateContact";
    case errc::unique_bonds_violated: return "UniqueBondsViolated";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::heterogeneous_lengths: return "HeterogeneousLengths";
    case errc::parse_error: return "ParseError";
    case errc::unbalanced_bracket: return "UnbalancedBracket";
    case errc::invalid_character: return "InvalidCharacter";
    case errc::not_secondary: return "NotSecondary";
    case errc::alphabet_exhausted: return "AlphabetExhausted";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::invalid_metric_index: return "InvalidMetricIndex";
    case errc::precondition_violated: return "PreconditionViolated";
    }
    return "Unknown";
}

/// Every failure in the library is reported as an `error` carrying a
/// machine-readable code; the message is for humans.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

    [[nodiscard]] errc code() const noexcept { return code_; }
    /// The message without the code prefix.
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    errc code_;
    std::string detail_;
};

} // namespace edgemetric
