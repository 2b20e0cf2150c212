// report.hpp
// Result of an exhaustive verification run. Failure is data, not an error.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace primeclass {

struct Counterexample {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::string expected;
    std::string got;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
    std::string name;
    bool passed = true;
    std::uint64_t checks = 0;
    std::optional<Counterexample> counterexample;
    std::vector<std::string> notes;
};

// One status line, then the counterexample and notes, each on its own line.
void print_report(std::ostream& out, const VerificationReport& report);

}  // namespace primeclass
