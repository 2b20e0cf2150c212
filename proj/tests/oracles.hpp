// oracles.hpp
// Brute-force reference implementations used only by the tests. Nothing
// here calls into the library.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

// Sum decimal digits via the string form until one digit is left.
inline int digit_sum_root(std::int64_t n) {
    while (n >= 10) {
        std::int64_t sum = 0;
        for (char ch : std::to_string(n)) sum += ch - '0';
        n = sum;
    }
    return static_cast<int>(n);
}

// Mathematical (floored) remainder computed by repeated shifting, no % on negatives.
inline std::int64_t floor_mod(std::int64_t n, std::int64_t m) {
    std::int64_t r = n % m;
    while (r < 0) r += m;
    return r;
}

// Plain Eratosthenes with a bool per integer.
inline std::vector<std::uint64_t> eratosthenes(std::uint64_t limit) {
    std::vector<bool> is_composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (is_composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i + i; j <= limit; j += i) is_composite[j] = true;
    }
    return primes;
}

// Divides by every d from 2 upward.
inline bool slow_is_prime(std::int64_t n) {
    if (n < 0) n = -n;
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::map<std::uint64_t, unsigned> slow_factor(std::uint64_t n) {
    std::map<std::uint64_t, unsigned> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    if (n > 1) ++out[n];
    return out;
}

}  // namespace oracle
