#pragma once

#include <cstdlib>

#include "tcw/error.hpp"

namespace tcw {

/// Work cap for the semi-algorithms (ring-reduction steps, Fourier-Motzkin
/// rows). The TCW_BUDGET environment variable overrides the default.
class Budget {
  public:
    explicit Budget(long long limit = from_env()) : limit_(limit) {}

    void charge(Errc on_exhaustion, long long amount = 1) {
        used_ += amount;
        if (used_ > limit_) fail(on_exhaustion, "work budget of " + std::to_string(limit_) + " exceeded");
    }

    long long used() const { return used_; }
    long long limit() const { return limit_; }

    static long long from_env() {
        if (const char* s = std::getenv("TCW_BUDGET")) {
            long long v = std::atoll(s);
            if (v > 0) return v;
        }
        return 5'000'000;
    }

  private:
    long long limit_;
    long long used_ = 0;
};

}  // namespace tcw
