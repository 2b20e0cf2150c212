#include "primeclass/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "primeclass/array_views.hpp"
#include "primeclass/prime_engine.hpp"
#include "primeclass/product_algebra.hpp"
#include "primeclass/residue.hpp"

namespace primeclass::cli {

namespace {

enum class Format { text, csv };

const std::map<std::string, Format> kFormats = {{"text", Format::text}, {"csv", Format::csv}};

constexpr std::int64_t kProductRuleBound = 200;

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "Output format: text or csv")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->default_str("text");
}

std::string factorization_cell(const TableCell& c) {
    switch (c.kind) {
        case CellKind::unit: return "unit";
        case CellKind::prime: return "";
        case CellKind::composite: break;
    }
    return c.factorization.to_string("*");
}

void print_classify(std::ostream& out, std::int64_t n, Format format) {
    const ClassifiedInteger ci = decompose(n);
    if (format == Format::csv) {
        out << "value,type,class,n\n"
            << ci.value << ',' << letter(ci.type) << ',' << class_name(ci.six_class) << ',' << ci.index << '\n';
        return;
    }
    out << "value=" << ci.value << " type=" << letter(ci.type) << " class=" << class_name(ci.six_class)
        << " n=" << ci.index << '\n';
}

void print_factor(std::ostream& out, std::int64_t n) {
    const Factorization f = factorize(n);
    if (f.is_unit())
        out << n << " is a unit\n";
    else if (f.is_prime())
        out << n << " is prime\n";
    else
        out << n << " = " << f.to_string(" * ") << '\n';
}

void print_table8(std::ostream& out, std::int64_t max_n, Format format) {
    const auto rows = table_viii(max_n);
    if (format == Format::csv) {
        out << "n,alpha_type,alpha_value,alpha_factorization,beta_type,beta_value,beta_factorization\n";
        for (const TableRow& r : rows)
            out << r.n << ',' << letter(r.alpha.type) << ',' << r.alpha.value << ',' << factorization_cell(r.alpha)
                << ',' << letter(r.beta.type) << ',' << r.beta.value << ',' << factorization_cell(r.beta) << '\n';
        return;
    }

    auto text_cell = [](const TableCell& c) {
        return c.kind == CellKind::prime ? std::string("prime") : factorization_cell(c);
    };
    std::size_t wn = 1, wv = 5, wf = 13;
    for (const TableRow& r : rows) {
        wn = std::max(wn, std::to_string(r.n).size());
        wv = std::max({wv, std::to_string(r.alpha.value).size(), std::to_string(r.beta.value).size()});
        wf = std::max({wf, text_cell(r.alpha).size(), text_cell(r.beta).size()});
    }
    auto w = [](std::size_t n) { return static_cast<int>(n); };
    out << std::right << std::setw(w(wn)) << "n" << "  type  " << std::setw(w(wv)) << "alpha" << "  " << std::left
        << std::setw(w(wf)) << "factorization" << "  type  " << std::right << std::setw(w(wv)) << "beta" << "  "
        << "factorization\n";
    for (const TableRow& r : rows) {
        const std::string beta_text = text_cell(r.beta);
        out << std::right << std::setw(w(wn)) << r.n << "  " << letter(r.alpha.type) << "     " << std::setw(w(wv))
            << r.alpha.value << "  " << std::left << std::setw(w(wf)) << text_cell(r.alpha) << "  "
            << letter(r.beta.type) << "     " << std::right << std::setw(w(wv)) << r.beta.value << "  " << beta_text
            << '\n';
    }
}

void print_sieve(std::ostream& out, std::uint64_t limit, Format format, unsigned threads) {
    const auto primes = sieve(limit, SieveOptions{.threads = threads});
    if (format == Format::csv) {
        out << "prime,type,class\n";
        for (std::uint64_t p : primes) {
            const auto v = static_cast<std::int64_t>(p);
            out << p << ',' << letter(type_of(v)) << ',' << class_name(class_of(v)) << '\n';
        }
        return;
    }
    for (std::size_t i = 0; i < primes.size(); ++i) out << (i > 0 ? " " : "") << primes[i];
    out << '\n';
}

int run_verify(std::ostream& out, std::int64_t limit, unsigned threads) {
    const VerifyOptions opts{.threads = threads};
    std::vector<VerificationReport> reports;
    reports.push_back(verify_matrix());
    reports.push_back(verify_type_closure(limit, opts));
    reports.push_back(verify_class_closure(limit, opts));
    reports.push_back(verify_product_rules(kProductRuleBound));
    reports.push_back(prime_location_check(static_cast<std::uint64_t>(std::max<std::int64_t>(limit, 5))));
    bool ok = true;
    for (const auto& r : reports) {
        print_report(out, r);
        ok = ok && r.passed;
    }
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

void print_bench(std::ostream& out, std::uint64_t limit, unsigned threads) {
    const BenchReport r = bench(limit, SieveOptions{.threads = threads});
    out << "limit=" << r.limit << '\n'
        << "naive_flags=" << r.naive_flags << '\n'
        << "wheel_candidates=" << r.wheel_candidates << '\n'
        << "candidate_ratio=" << std::fixed << std::setprecision(6) << r.candidate_ratio << '\n'
        << "naive_primes=" << r.naive_primes << '\n'
        << "wheel_primes=" << r.wheel_primes << '\n'
        << "identical=" << (r.identical ? "yes" : "no") << '\n'
        << "naive_seconds=" << r.naive_seconds << '\n'
        << "wheel_seconds=" << r.wheel_seconds << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Digital-root Types, mod-6 Classes and the 6k+-1 prime wheel", "primeclass"};
    app.require_subcommand(1);
    app.footer("Negative arguments need a '--' separator or the '=' form, e.g. 'classify -- -2' or '--first=-26'.");

    Format format = Format::text;
    std::int64_t number = 0;
    std::int64_t max_n = 100;
    std::uint64_t limit = 0;
    std::int64_t verify_limit = 3000;
    std::string which;
    std::int64_t first = 0;
    std::int64_t rows = 3;
    unsigned threads = 0;

    auto* classify = app.add_subcommand("classify", "Print the Type, Class and class index of an integer");
    classify->add_option("n", number, "Signed 64-bit integer")->required();
    add_format(classify, format);

    auto* factor = app.add_subcommand("factor", "Prime factorization of a nonzero integer");
    factor->add_option("n", number, "Signed 64-bit integer, nonzero")->required();

    auto* table8 = app.add_subcommand("table8", "Alpha/beta values 1+6n and 5+6n with factorizations");
    table8->add_option("--max-n", max_n, "Last row index")->capture_default_str()->check(CLI::NonNegativeNumber);
    add_format(table8, format);

    auto* sieve_cmd = app.add_subcommand("sieve", "Primes up to a limit (segmented 6k+-1 wheel sieve)");
    sieve_cmd->add_option("--limit", limit, "Upper bound, at least 2")->required();
    sieve_cmd->add_option("--threads", threads, "Worker threads, 0 = hardware concurrency");
    add_format(sieve_cmd, format);

    auto* arrays = app.add_subcommand("arrays", "Render the A1, A2, A3 or OA/EA number arrays");
    arrays->add_option("--which", which, "a1, a2, a3 or oa-ea")
        ->required()
        ->check(CLI::IsMember({"a1", "a2", "a3", "oa-ea"}, CLI::ignore_case));
    auto* first_opt = arrays->add_option("--first", first, "First value of the first row");
    arrays->add_option("--rows", rows, "Number of rows")->capture_default_str();
    add_format(arrays, format);

    auto* verify = app.add_subcommand("verify", "Exhaustive closure, product-rule and prime-location checks");
    verify->add_option("--limit", verify_limit, "Check all |x|,|y| <= limit")->capture_default_str();
    verify->add_option("--threads", threads, "Worker threads, 0 = hardware concurrency");

    auto* bench_cmd = app.add_subcommand("bench", "Compare the naive and wheel sieves");
    bench_cmd->add_option("--limit", limit, "Upper bound, at least 100")->required();
    bench_cmd->add_option("--threads", threads, "Worker threads for the wheel sieve");

    std::vector<const char*> argv = {"primeclass"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*classify) {
            print_classify(out, number, format);
        } else if (*factor) {
            print_factor(out, number);
        } else if (*table8) {
            print_table8(out, max_n, format);
        } else if (*sieve_cmd) {
            print_sieve(out, limit, format, threads);
        } else if (*arrays) {
            const ArrayKind kind = *array_kind_from_name(CLI::detail::to_lower(which));
            const ArrayView view = render(kind, first_opt->count() > 0 ? first : default_first_value(kind), rows);
            if (format == Format::csv)
                write_csv(out, view);
            else
                write_text(out, view);
        } else if (*verify) {
            return run_verify(out, verify_limit, threads);
        } else if (*bench_cmd) {
            print_bench(out, limit, threads);
        }
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace primeclass::cli
