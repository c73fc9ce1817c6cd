#pragma once

#include "billiard/table.hpp"
#include "billiard/unfolding.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace billiard {

/// Cross-validation sweep: for every start position a/b (b <= max_denominator),
/// every coprime slope m/n (m + n <= max_sum) and every aspect ratio, the
/// closed-form classification must agree with direct simulation.
struct VerifyOptions {
    std::int64_t max_denominator = 8;
    std::int64_t max_sum = 8;
    std::vector<Rational> rhos{Rational(1)};
    bool parallel = false;
    std::int64_t max_steps = 0;  // 0: default cap
};

struct VerifyCell {
    Rational p0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    Rational rho;
    OrbitClass classified;
    bool agree = false;
    std::string detail;  // empty when agree
};

struct VerifyReport {
    std::vector<VerifyCell> cells;  // deterministic order, independent of thread count
    std::int64_t disagreements = 0;
    bool odd_period_seen = false;
};

VerifyReport run_verify(const VerifyOptions& options);

} // namespace billiard
