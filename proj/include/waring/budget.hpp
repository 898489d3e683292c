#pragma once

#include <cstdint>

#include "waring/errors.hpp"

namespace waring {

// Guard against combinatorial blow-up in the counting oracles.  Callers pick
// a limit in "elementary operations" (loop bodies, map updates); exceeding it
// raises BudgetError rather than silently grinding on.
class OpBudget {
public:
    static constexpr std::uint64_t kDefaultLimit = 100'000'000;

    explicit OpBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

    void charge(std::uint64_t ops) {
        used_ += ops;
        if (used_ > limit_)
            throw BudgetError("operation budget exhausted (" +
                              std::to_string(used_) + " > " +
                              std::to_string(limit_) + ")");
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

} // namespace waring
