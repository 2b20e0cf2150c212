// prime_engine.hpp
// 6k+-1 wheel: candidate enumeration, trial-division primality and
// factorization, a segmented wheel sieve, and the alpha/beta prime table.
//
// Every prime other than 2 and 3 is 1 or 5 mod 6, i.e. of class alpha or
// beta. The sieve stores one flag per wheel value >= 5:
//
//   flag index i  ->  value 3*i + 5 - (i & 1)     (5, 7, 11, 13, 17, 19, ...)
//   value v       ->  flag index (v - 4) / 3

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "primeclass/report.hpp"
#include "primeclass/residue.hpp"

namespace primeclass {

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned multiplicity = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;  // strictly increasing primes

    bool is_unit() const noexcept { return factors.empty(); }
    bool is_prime() const noexcept { return factors.size() == 1 && factors.front().multiplicity == 1; }

    // "5*11^2" for sep "*"; a negative sign adds a leading "-1" factor.
    // Units render as "1" or "-1".
    std::string to_string(std::string_view sep = "*") const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Upper bound accepted by sieve, naive_sieve and wheel_candidates.
inline constexpr std::uint64_t kMaxSieveLimit = 1'000'000'000;

// Default sieve segment, in flags (one byte each).
inline constexpr std::size_t kDefaultSegmentFlags = std::size_t{1} << 18;

// floor(sqrt(n)), exact for all 64-bit n.
std::uint64_t isqrt(std::uint64_t n) noexcept;

// 2, 3, then every v <= limit with v = 1 or 5 (mod 6), v >= 5. Excludes 1.
// Throws std::invalid_argument for limit < 2, std::length_error above kMaxSieveLimit.
std::vector<std::uint64_t> wheel_candidates(std::uint64_t limit);

// Size of wheel_candidates(limit) without materializing it; 0 for limit < 2.
std::uint64_t wheel_candidate_count(std::uint64_t limit) noexcept;

// Trial division by 2, 3 and the wheel up to isqrt(|n|). -p is prime iff p is.
bool is_prime(std::int64_t n) noexcept;

// Throws std::domain_error for n == 0.
Factorization factorize(std::int64_t n);

struct SieveOptions {
    std::size_t segment_flags = kDefaultSegmentFlags;
    unsigned threads = 1;  // 0 = hardware concurrency
};

// All primes <= limit, ascending. Throws std::invalid_argument for limit < 2
// or a zero segment size, std::length_error above kMaxSieveLimit.
std::vector<std::uint64_t> sieve(std::uint64_t limit, SieveOptions opts = {});

// Plain Eratosthenes over every integer in [0, limit]; the benchmark baseline.
std::vector<std::uint64_t> naive_sieve(std::uint64_t limit);

// Every prime 3 < p <= limit (and -p) is of class alpha or beta; also
// reports the classes of the exceptions 2, -2, 3, -3.
// Throws std::invalid_argument for limit < 5.
VerificationReport prime_location_check(std::uint64_t limit);

enum class CellKind { unit, prime, composite };

struct TableCell {
    TypeLetter type = TypeLetter::a;
    std::int64_t value = 0;
    CellKind kind = CellKind::unit;
    Factorization factorization;  // meaningful for composites

    friend bool operator==(const TableCell&, const TableCell&) = default;
};

struct TableRow {
    std::int64_t n = 0;
    TableCell alpha;  // 1 + 6n
    TableCell beta;   // 5 + 6n

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Largest max_n accepted by table_viii.
inline constexpr std::int64_t kMaxTableN = 100'000'000;

// Rows n = 0..max_n of the alpha/beta table. Throws std::invalid_argument
// for max_n outside [0, kMaxTableN].
std::vector<TableRow> table_viii(std::int64_t max_n);

struct BenchReport {
    std::uint64_t limit = 0;
    std::uint64_t naive_flags = 0;       // integers 2..limit
    std::uint64_t wheel_candidates = 0;  // including the seeds 2 and 3
    double candidate_ratio = 0.0;        // wheel_candidates / naive_flags
    std::uint64_t naive_primes = 0;
    std::uint64_t wheel_primes = 0;
    bool identical = false;
    double naive_seconds = 0.0;
    double wheel_seconds = 0.0;
};

// Throws std::invalid_argument for limit < 100, std::length_error above kMaxSieveLimit.
BenchReport bench(std::uint64_t limit, SieveOptions opts = {});

}  // namespace primeclass
