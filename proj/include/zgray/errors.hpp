#pragma once

#include <stdexcept>
#include <string>

namespace zgray {

// Enumeration would exceed the configured codeword budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 24;

}  // namespace zgray
