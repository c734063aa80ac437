#pragma once

#include <cstdint>
#include <stdexcept>

namespace barbell {

// Raised when an exponential search runs out of its node allowance.  A blown
// budget is an error, never a "no": callers must not present a truncated
// search as a completed one.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SearchBudget {
public:
    static constexpr uint64_t kDefaultCap = 10'000'000;

    explicit SearchBudget(uint64_t cap = kDefaultCap) : cap_(cap) {}

    void charge(uint64_t amount = 1) {
        used_ += amount;
        if (used_ > cap_) throw budget_error("search budget of " + std::to_string(cap_) + " nodes exceeded");
    }

    uint64_t used() const { return used_; }
    uint64_t cap() const { return cap_; }

private:
    uint64_t cap_;
    uint64_t used_ = 0;
};

}  // namespace barbell
