#include "primeclass/prime_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace primeclass {

namespace {

constexpr std::uint64_t flag_value(std::uint64_t i) noexcept { return 3 * i + 5 - (i & 1); }
constexpr std::uint64_t flag_index(std::uint64_t v) noexcept { return (v - 4) / 3; }

// Number of wheel values in [5, limit].
constexpr std::uint64_t wheel_flag_count(std::uint64_t limit) noexcept {
    if (limit < 5) return 0;
    return (limit - 1) / 6 + (limit + 1) / 6;
}

void check_sieve_limit(std::uint64_t limit, const char* who) {
    if (limit < 2) throw std::invalid_argument(std::string(who) + ": limit must be at least 2");
    if (limit > kMaxSieveLimit)
        throw std::length_error(std::string(who) + ": limit " + std::to_string(limit) +
                                " exceeds the memory budget of " + std::to_string(kMaxSieveLimit));
}

std::uint64_t magnitude(std::int64_t n) noexcept {
    return n < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
}

// Strips every factor d from m, returning the multiplicity.
unsigned strip(std::uint64_t& m, std::uint64_t d) noexcept {
    unsigned k = 0;
    while (m % d == 0) {
        m /= d;
        ++k;
    }
    return k;
}

// Clears the multiples p*q (q >= p, q = 1 or 5 mod 6) in flags [lo, hi).
void cross_off(std::vector<std::uint8_t>& flags, std::uint64_t lo, std::uint64_t hi,
               const std::vector<std::uint64_t>& base) {
    const std::uint64_t vlo = flag_value(lo);
    const std::uint64_t vhi = flag_value(hi - 1);
    for (std::uint64_t p : base) {
        if (p < 5) continue;
        if (p * p > vhi) break;
        const std::uint64_t qmin = std::max(p, (vlo + p - 1) / p);
        for (std::uint64_t r : {1u, 5u}) {
            const std::uint64_t q = qmin + (r + 6 - qmin % 6) % 6;
            const std::uint64_t m = p * q;
            if (m > vhi) continue;
            for (std::uint64_t i = flag_index(m); i < hi; i += 2 * p) flags[i - lo] = 0;
        }
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string Factorization::to_string(std::string_view sep) const {
    std::string out = sign < 0 ? "-1" : "";
    if (factors.empty()) return sign < 0 ? out : "1";
    for (const PrimePower& pp : factors) {
        if (!out.empty()) out += sep;
        out += std::to_string(pp.prime);
        if (pp.multiplicity > 1) out += "^" + std::to_string(pp.multiplicity);
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    // Correct the floating-point estimate so that r*r <= n < (r+1)*(r+1).
    while (r > 0 && (r > UINT32_MAX || r * r > n)) --r;
    while (r < UINT32_MAX && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint64_t> wheel_candidates(std::uint64_t limit) {
    check_sieve_limit(limit, "wheel_candidates");
    std::vector<std::uint64_t> out;
    out.reserve(wheel_candidate_count(limit));
    out.push_back(2);
    if (limit >= 3) out.push_back(3);
    const std::uint64_t n = wheel_flag_count(limit);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(flag_value(i));
    return out;
}

std::uint64_t wheel_candidate_count(std::uint64_t limit) noexcept {
    if (limit < 2) return 0;
    return (limit >= 3 ? 2 : 1) + wheel_flag_count(limit);
}

bool is_prime(std::int64_t n) noexcept {
    const std::uint64_t m = magnitude(n);
    if (m < 2) return false;
    if (m < 4) return true;
    if (m % 2 == 0 || m % 3 == 0) return false;
    const std::uint64_t bound = isqrt(m);
    for (std::uint64_t d = 5; d <= bound; d += 6)
        if (m % d == 0 || m % (d + 2) == 0) return false;
    return true;
}

Factorization factorize(std::int64_t n) {
    if (n == 0) throw std::domain_error("zero has no factorization");
    Factorization f{.sign = n < 0 ? -1 : 1};
    std::uint64_t m = magnitude(n);
    auto take = [&](std::uint64_t d) {
        if (const unsigned k = strip(m, d)) f.factors.push_back({d, k});
    };
    take(2);
    take(3);
    for (std::uint64_t d = 5; d <= m / d; d += 6) {
        take(d);
        if (d + 2 <= m / (d + 2)) take(d + 2);
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

std::vector<std::uint64_t> sieve(std::uint64_t limit, SieveOptions opts) {
    check_sieve_limit(limit, "sieve");
    if (opts.segment_flags == 0) throw std::invalid_argument("sieve: segment size must be positive");

    std::vector<std::uint64_t> primes = {2};
    if (limit >= 3) primes.push_back(3);
    const std::uint64_t nflags = wheel_flag_count(limit);
    if (nflags == 0) return primes;

    const std::uint64_t root = isqrt(limit);
    const std::vector<std::uint64_t> base = root >= 5 ? sieve(root) : std::vector<std::uint64_t>{};

    const std::uint64_t seg = opts.segment_flags;
    const std::uint64_t segments = (nflags + seg - 1) / seg;
    const unsigned hw = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(hw, segments));

    // Each worker owns a contiguous run of segments; outputs concatenate in order.
    std::vector<std::vector<std::uint64_t>> found(workers);
    auto run = [&](std::uint64_t w) {
        std::vector<std::uint8_t> flags(seg);
        auto& out = found[w];
        for (std::uint64_t s = segments * w / workers; s < segments * (w + 1) / workers; ++s) {
            const std::uint64_t lo = s * seg;
            const std::uint64_t hi = std::min(nflags, lo + seg);
            std::fill(flags.begin(), flags.begin() + static_cast<std::ptrdiff_t>(hi - lo), std::uint8_t{1});
            cross_off(flags, lo, hi, base);
            for (std::uint64_t i = lo; i < hi; ++i)
                if (flags[i - lo]) out.push_back(flag_value(i));
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    for (const auto& chunk : found) primes.insert(primes.end(), chunk.begin(), chunk.end());
    return primes;
}

std::vector<std::uint64_t> naive_sieve(std::uint64_t limit) {
    check_sieve_limit(limit, "naive_sieve");
    std::vector<std::uint8_t> composite(limit + 1, 0);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

VerificationReport prime_location_check(std::uint64_t limit) {
    if (limit < 5) throw std::invalid_argument("prime_location_check: limit must be at least 5");
    VerificationReport report{.name = "prime location"};
    for (std::uint64_t p : sieve(limit)) {
        if (p <= 3) continue;
        const auto v = static_cast<std::int64_t>(p);
        for (std::int64_t signed_p : {v, -v}) {
            const SixClass c = class_of(signed_p);
            ++report.checks;
            if (c != SixClass::alpha && c != SixClass::beta && !report.counterexample) {
                report.counterexample = Counterexample{signed_p, 0, "class alpha or beta", std::string(class_name(c))};
                report.passed = false;
            }
        }
    }
    for (std::int64_t e : {2, -2, 3, -3})
        report.notes.push_back("exception " + std::to_string(e) + " is class " + std::string(class_name(class_of(e))) +
                               ", type " + letter(type_of(e)));
    return report;
}

std::vector<TableRow> table_viii(std::int64_t max_n) {
    if (max_n < 0 || max_n > kMaxTableN)
        throw std::invalid_argument("table_viii: max_n must be in [0, " + std::to_string(kMaxTableN) + "]");
    auto cell = [](std::int64_t v) {
        TableCell c{.type = type_of(v), .value = v};
        if (v == 1) {
            c.kind = CellKind::unit;
        } else {
            c.factorization = factorize(v);
            c.kind = c.factorization.is_prime() ? CellKind::prime : CellKind::composite;
        }
        return c;
    };
    std::vector<TableRow> rows;
    rows.reserve(static_cast<std::size_t>(max_n) + 1);
    for (std::int64_t n = 0; n <= max_n; ++n)
        rows.push_back({n, cell(compose(SixClass::alpha, n)), cell(compose(SixClass::beta, n))});
    return rows;
}

BenchReport bench(std::uint64_t limit, SieveOptions opts) {
    if (limit < 100) throw std::invalid_argument("bench: limit must be at least 100");
    check_sieve_limit(limit, "bench");
    BenchReport r{.limit = limit, .naive_flags = limit - 1, .wheel_candidates = wheel_candidate_count(limit)};
    r.candidate_ratio = static_cast<double>(r.wheel_candidates) / static_cast<double>(r.naive_flags);

    auto start = std::chrono::steady_clock::now();
    const auto naive = naive_sieve(limit);
    r.naive_seconds = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const auto wheel = sieve(limit, opts);
    r.wheel_seconds = seconds_since(start);

    r.naive_primes = naive.size();
    r.wheel_primes = wheel.size();
    r.identical = naive == wheel;
    return r;
}

}  // namespace primeclass
