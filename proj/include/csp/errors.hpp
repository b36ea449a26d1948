#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace csp {

/// Exhaustive enumeration would exceed the configured candidate budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
        : std::runtime_error("instance too large: " + std::to_string(needed) +
                             " candidates exceed budget " + std::to_string(budget)),
          needed_(needed),
          budget_(budget) {}

    std::uint64_t needed() const { return needed_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t needed_;
    std::uint64_t budget_;
};

/// Malformed instance or solution text; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A solution presented as OPT failed the exact-optimality check.
class OptVerificationError : public std::runtime_error {
public:
    OptVerificationError(int given_cost, int exact_cost)
        : std::runtime_error("given solution is not optimal: cost " +
                             std::to_string(given_cost) + ", exact optimum " +
                             std::to_string(exact_cost)),
          given_cost_(given_cost),
          exact_cost_(exact_cost) {}

    int given_cost() const { return given_cost_; }
    int exact_cost() const { return exact_cost_; }

private:
    int given_cost_;
    int exact_cost_;
};

/// The approximation-ratio formula is undefined for the given sampling size.
class UnboundedRatio : public std::domain_error {
public:
    explicit UnboundedRatio(int r)
        : std::domain_error("ratio bound is unbounded for r = " + std::to_string(r) +
                            " (requires r >= 3)") {}
};

}  // namespace csp
