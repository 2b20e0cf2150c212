#include "primeclass/report.hpp"

namespace primeclass {

void print_report(std::ostream& out, const VerificationReport& report) {
    out << (report.passed ? "PASS " : "FAIL ") << report.name << " (" << report.checks << " checks)\n";
    if (report.counterexample) {
        const auto& c = *report.counterexample;
        out << "  counterexample: x=" << c.x << " y=" << c.y << " expected " << c.expected << ", got " << c.got
            << '\n';
    }
    for (const auto& note : report.notes) out << "  note: " << note << '\n';
}

}  // namespace primeclass
