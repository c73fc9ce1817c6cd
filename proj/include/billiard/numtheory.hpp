#pragma once

#include <cstdint>
#include <vector>

namespace billiard {

/// gcd with the usual conventions: gcd(a, 0) = a, gcd(0, 0) = 0.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

bool coprime(std::uint64_t a, std::uint64_t b);

/// Euler's totient via trial-division factorisation and the product
/// formula phi(N) = N * prod_{p | N} (p - 1) / p, in exact integers.
/// Rejects N = 0.
std::uint64_t totient_product(std::uint64_t n);

/// Euler's totient as the rounded cosine sum
///   phi(N) = sum_{k=1..N} gcd(k, N) * cos(2 pi k / N).
/// The sum is integral in exact arithmetic; for N <= 10^4 the float
/// residual must stay below 1e-6 or this throws, flagging degraded
/// floating-point accumulation rather than returning a wrong answer.
std::uint64_t totient_dft(std::uint64_t n);

/// Literal count of k in 1..N with gcd(k, N) = 1. The reference the other
/// two methods are checked against.
std::uint64_t totient_bruteforce(std::uint64_t n);

/// Ascending list of all totatives of N (k in 1..N coprime to N).
std::vector<std::uint64_t> totatives(std::uint64_t n);

} // namespace billiard
