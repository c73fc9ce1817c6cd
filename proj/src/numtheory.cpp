#include "billiard/numtheory.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace billiard {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

bool coprime(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b) == 1;
}

std::uint64_t totient_product(std::uint64_t n) {
    if (n == 0) throw std::domain_error("totient_product: N must be positive");
    std::uint64_t result = n;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        result -= result / p;
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

std::uint64_t totient_dft(std::uint64_t n) {
    if (n == 0) throw std::domain_error("totient_dft: N must be positive");
    // Kahan-compensated so the residual check below stays meaningful.
    double sum = 0.0;
    double comp = 0.0;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::uint64_t k = 1; k <= n; ++k) {
        double term = static_cast<double>(std::gcd(k, n)) * std::cos(step * static_cast<double>(k));
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double rounded = std::round(sum);
    if (n <= 10000 && std::abs(sum - rounded) >= 1e-6)
        throw std::runtime_error("totient_dft: cosine sum residual exceeds 1e-6");
    if (rounded < 0.0) throw std::runtime_error("totient_dft: negative sum");
    return static_cast<std::uint64_t>(rounded);
}

std::uint64_t totient_bruteforce(std::uint64_t n) {
    if (n == 0) throw std::domain_error("totient_bruteforce: N must be positive");
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

std::vector<std::uint64_t> totatives(std::uint64_t n) {
    if (n == 0) throw std::domain_error("totatives: N must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) out.push_back(k);
    return out;
}

} // namespace billiard
