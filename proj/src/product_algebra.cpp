#include "primeclass/product_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <tuple>

namespace primeclass {

namespace {

__extension__ using Wide = __int128;

// Matrix of products M, one string per row a..i, columns a..i.
constexpr std::array<std::string_view, 9> kStoredRows = {
    "abcdefghi",
    "bdfhacegi",
    "cficficfi",
    "dhcgbfaei",
    "eafbgchdi",
    "fcifcifci",
    "gecahfdbi",
    "hgfedcbai",
    "iiiiiiiii",
};

constexpr bool in_cfi(TypeLetter t) noexcept { return numeric_index(t) % 3 == 0; }

constexpr std::array<TypeLetter, 3> kADG = {TypeLetter::a, TypeLetter::d, TypeLetter::g};
constexpr std::array<TypeLetter, 3> kBEH = {TypeLetter::b, TypeLetter::e, TypeLetter::h};

bool member(const std::array<TypeLetter, 3>& set, TypeLetter t) noexcept {
    return std::find(set.begin(), set.end(), t) != set.end();
}

std::string type_str(TypeLetter t) { return std::string("type ") + letter(t); }

std::string class_str(SixClass c, std::int64_t index) {
    return "class " + std::string(class_name(c)) + " index " + std::to_string(index);
}

using Key = std::tuple<std::uint64_t, std::uint64_t, std::int64_t, std::int64_t>;

Key order_key(const Counterexample& c) noexcept {
    return {static_cast<std::uint64_t>(std::llabs(c.x)), static_cast<std::uint64_t>(std::llabs(c.y)), c.x, c.y};
}

struct Partial {
    std::uint64_t checks = 0;
    std::optional<Counterexample> first;

    void record(Counterexample c) {
        if (!first || order_key(c) < order_key(*first)) first = std::move(c);
    }
};

unsigned worker_count(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

void check_limit(std::int64_t limit) {
    if (limit < 1 || limit > kMaxVerifyLimit)
        throw std::invalid_argument("verify: limit must be in [1, " + std::to_string(kMaxVerifyLimit) + "]");
}

// Runs body(x, partial) for x in [-limit, limit], split into contiguous
// blocks across workers; merges the partial results deterministically.
template <class Body>
VerificationReport run_partitioned(std::string name, std::int64_t limit, unsigned threads, Body body) {
    const std::int64_t span = 2 * limit + 1;
    const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(worker_count(threads), span));
    std::vector<Partial> partials(static_cast<std::size_t>(workers));

    auto run_block = [&](std::int64_t w) {
        const std::int64_t begin = -limit + span * w / workers;
        const std::int64_t end = -limit + span * (w + 1) / workers;
        for (std::int64_t x = begin; x < end; ++x) body(x, partials[static_cast<std::size_t>(w)]);
    };

    if (workers == 1) {
        run_block(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (std::int64_t w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
    }

    VerificationReport report{.name = std::move(name)};
    Partial merged;
    for (auto& p : partials) {
        merged.checks += p.checks;
        if (p.first) merged.record(std::move(*p.first));
    }
    report.checks = merged.checks;
    report.counterexample = std::move(merged.first);
    report.passed = !report.counterexample;
    return report;
}

}  // namespace

const TypeTable& stored_type_matrix() noexcept {
    static const TypeTable table = [] {
        TypeTable t{};
        for (std::size_t r = 0; r < 9; ++r)
            for (std::size_t c = 0; c < 9; ++c) t[r][c] = *type_from_letter(kStoredRows[r][c]);
        return t;
    }();
    return table;
}

TypeTable derived_type_matrix() noexcept {
    TypeTable t{};
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 9; ++c)
            t[r][c] = type_of(static_cast<std::int64_t>((r + 1) * (c + 1)));
    return t;
}

TypeLetter type_product(TypeLetter x, TypeLetter y) noexcept {
    return stored_type_matrix()[static_cast<std::size_t>(numeric_index(x) - 1)]
                               [static_cast<std::size_t>(numeric_index(y) - 1)];
}

std::optional<TypeLetter> TypeSubmatrix::at(TypeLetter row, TypeLetter col) const noexcept {
    const auto r = std::find(rows.begin(), rows.end(), row);
    const auto c = std::find(cols.begin(), cols.end(), col);
    if (r == rows.end() || c == cols.end()) return std::nullopt;
    return cells[static_cast<std::size_t>(r - rows.begin())][static_cast<std::size_t>(c - cols.begin())];
}

TypeSubmatrix submatrix(Submatrix which) noexcept {
    TypeSubmatrix m{};
    switch (which) {
        case Submatrix::M1: m.rows = kADG; m.cols = kADG; break;
        case Submatrix::M2: m.rows = kBEH; m.cols = kBEH; break;
        case Submatrix::M3: m.rows = kBEH; m.cols = kADG; break;
    }
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m.cells[r][c] = type_product(m.rows[r], m.cols[c]);
    return m;
}

SixClass class_product(SixClass x, SixClass y) noexcept {
    return class_of(static_cast<std::int64_t>(offset(x)) * offset(y));
}

std::int64_t ProductRule::result_index(std::int64_t left_index, std::int64_t right_index) const {
    const Wide l = left_index, r = right_index;
    const Wide cross = l * r;
    // Beyond 2^70 the 6*l*r term cannot be cancelled back into int64 range, and 6*cross could overflow.
    constexpr Wide cap = Wide{1} << 70;
    const Wide wide = (cross > cap || cross < -cap) ? cap : c0 + c_left * l + c_right * r + 6 * cross;
    if (wide < std::numeric_limits<std::int64_t>::min() || wide > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("product rule: index does not fit in a 64-bit signed integer");
    return static_cast<std::int64_t>(wide);
}

ProductRule product_rule(SixClass x, SixClass y) noexcept {
    const SixClass result = class_product(x, y);
    return ProductRule{
        .left = x,
        .right = y,
        .result = result,
        .c0 = (offset(x) * offset(y) - offset(result)) / 6,
        .c_left = offset(y),
        .c_right = offset(x),
    };
}

std::vector<ProductRule> all_product_rules() {
    std::vector<ProductRule> rules;
    rules.reserve(36);
    for (SixClass x : kAllClasses)
        for (SixClass y : kAllClasses) rules.push_back(product_rule(x, y));
    return rules;
}

VerificationReport verify_type_closure(std::int64_t limit, VerifyOptions opts) {
    check_limit(limit);
    std::vector<TypeLetter> types(static_cast<std::size_t>(2 * limit + 1));
    for (std::int64_t y = -limit; y <= limit; ++y) types[static_cast<std::size_t>(y + limit)] = type_of(y);

    auto report = run_partitioned("type closure", limit, opts.threads, [&](std::int64_t x, Partial& out) {
        const TypeLetter tx = types[static_cast<std::size_t>(x + limit)];
        for (std::int64_t y = -limit; y <= limit; ++y) {
            const TypeLetter ty = types[static_cast<std::size_t>(y + limit)];
            const TypeLetter got = type_of(x * y);
            const TypeLetter want = type_product(tx, ty);
            ++out.checks;
            if (got != want) {
                out.record({x, y, type_str(want), type_str(got)});
            } else if ((in_cfi(tx) || in_cfi(ty)) && !in_cfi(got)) {
                out.record({x, y, "type in {c,f,i}", type_str(got)});
            }
        }
    });
    report.notes.push_back("products with an operand of type c, f or i checked to land in {c,f,i}");
    return report;
}

VerificationReport verify_class_closure(std::int64_t limit, VerifyOptions opts) {
    check_limit(limit);
    std::vector<ClassifiedInteger> dec(static_cast<std::size_t>(2 * limit + 1));
    for (std::int64_t y = -limit; y <= limit; ++y) dec[static_cast<std::size_t>(y + limit)] = decompose(y);
    const auto rules = all_product_rules();

    return run_partitioned("class closure", limit, opts.threads, [&](std::int64_t x, Partial& out) {
        const ClassifiedInteger& dx = dec[static_cast<std::size_t>(x + limit)];
        for (std::int64_t y = -limit; y <= limit; ++y) {
            const ClassifiedInteger& dy = dec[static_cast<std::size_t>(y + limit)];
            const ProductRule& rule =
                rules[static_cast<std::size_t>(dx.six_class) * 6 + static_cast<std::size_t>(dy.six_class)];
            const ClassifiedInteger got = decompose(x * y);
            const std::int64_t want_index = rule.result_index(dx.index, dy.index);
            ++out.checks;
            if (got.six_class != class_product(dx.six_class, dy.six_class) || got.six_class != rule.result ||
                got.index != want_index)
                out.record({x, y, class_str(rule.result, want_index), class_str(got.six_class, got.index)});
        }
    });
}

VerificationReport verify_matrix() {
    VerificationReport report{.name = "matrix of products"};
    auto fail = [&](std::int64_t x, std::int64_t y, std::string expected, std::string got) {
        ++report.checks;
        if (!report.counterexample) report.counterexample = Counterexample{x, y, std::move(expected), std::move(got)};
        report.passed = false;
    };

    const TypeTable& stored = stored_type_matrix();
    const TypeTable derived = derived_type_matrix();
    for (std::size_t r = 0; r < 9; ++r) {
        for (std::size_t c = 0; c < 9; ++c) {
            const auto x = static_cast<std::int64_t>(r + 1), y = static_cast<std::int64_t>(c + 1);
            if (stored[r][c] != derived[r][c]) fail(x, y, type_str(derived[r][c]), type_str(stored[r][c]));
            else if (stored[r][c] != stored[c][r]) fail(x, y, type_str(stored[c][r]), type_str(stored[r][c]));
            else ++report.checks;
        }
    }

    auto check_range = [&](Submatrix which, const std::array<TypeLetter, 3>& range, std::string_view label) {
        const TypeSubmatrix m = submatrix(which);
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 3; ++c) {
                if (!member(range, m.cells[r][c]))
                    fail(numeric_index(m.rows[r]), numeric_index(m.cols[c]), std::string(label), type_str(m.cells[r][c]));
                else
                    ++report.checks;
            }
        }
    };
    check_range(Submatrix::M1, kADG, "type in {a,d,g}");
    check_range(Submatrix::M2, kADG, "type in {a,d,g}");
    check_range(Submatrix::M3, kBEH, "type in {b,e,h}");

    report.notes.push_back("stored matrix M equals the mod-9 derivation (81 entries)");
    report.notes.push_back(
        "range(M2) = {a,d,g}: products of types b, e, h land in a, d, g (b*b = d, as beta*beta = alpha); "
        "the prose claim that M2 products remain of type b, e, h does not hold for the printed matrix");
    return report;
}

VerificationReport verify_product_rules(std::int64_t bound) {
    if (bound < 0) throw std::invalid_argument("verify_product_rules: bound must be non-negative");
    VerificationReport report{.name = "product rules"};
    for (const ProductRule& rule : all_product_rules()) {
        const bool shape_ok = rule.c_left == offset(rule.right) && rule.c_right == offset(rule.left) &&
                              offset(rule.left) * offset(rule.right) == offset(rule.result) + 6 * rule.c0;
        if (!shape_ok && !report.counterexample) {
            report.counterexample = Counterexample{offset(rule.left), offset(rule.right), "consistent coefficients",
                                                   "inconsistent coefficients"};
            report.passed = false;
        }
        for (std::int64_t nx = -bound; nx <= bound; ++nx) {
            const std::int64_t x = compose(rule.left, nx);
            for (std::int64_t ny = -bound; ny <= bound; ++ny) {
                const std::int64_t y = compose(rule.right, ny);
                const std::int64_t via_rule = compose(rule.result, rule.result_index(nx, ny));
                ++report.checks;
                if (via_rule != x * y && !report.counterexample) {
                    report.counterexample = Counterexample{x, y, std::to_string(x * y), std::to_string(via_rule)};
                    report.passed = false;
                }
            }
        }
    }
    return report;
}

}  // namespace primeclass
