#include "primeclass/array_views.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace primeclass {

namespace {

constexpr std::int64_t euclid_mod(std::int64_t n, std::int64_t m) noexcept {
    const std::int64_t r = n % m;
    return r < 0 ? r + m : r;
}

struct Layout {
    std::int64_t width;   // cells per row
    std::int64_t stride;  // value advance per row
    std::int64_t align;   // first_value must be 1 mod align
};

constexpr Layout layout(ArrayKind kind) noexcept {
    switch (kind) {
        case ArrayKind::A1:
        case ArrayKind::A2_transition: return {9, 9, 9};
        case ArrayKind::A3: return {3, 3, 3};
        case ArrayKind::OA_EA: break;
    }
    return {6, 6, 6};
}

// Position of each class within an OA_EA row, relative to the row's alpha value.
constexpr std::array<std::int64_t, 6> kOaEaShift = {0, 4, 2, 3, 1, 5};

Cell make_cell(std::int64_t v) { return {type_of(v), v}; }

}  // namespace

std::string_view array_kind_name(ArrayKind kind) noexcept {
    switch (kind) {
        case ArrayKind::A1: return "a1";
        case ArrayKind::A2_transition: return "a2";
        case ArrayKind::A3: return "a3";
        case ArrayKind::OA_EA: break;
    }
    return "oa-ea";
}

std::optional<ArrayKind> array_kind_from_name(std::string_view name) noexcept {
    for (ArrayKind k : {ArrayKind::A1, ArrayKind::A2_transition, ArrayKind::A3, ArrayKind::OA_EA})
        if (array_kind_name(k) == name) return k;
    return std::nullopt;
}

std::int64_t default_first_value(ArrayKind kind) noexcept {
    switch (kind) {
        case ArrayKind::A1: return 1;
        case ArrayKind::A2_transition: return -26;
        case ArrayKind::A3: return -26;
        case ArrayKind::OA_EA: break;
    }
    return -29;
}

ArrayView render(ArrayKind kind, std::int64_t first_value, std::int64_t row_count) {
    const Layout lay = layout(kind);
    const std::string name(array_kind_name(kind));
    if (row_count < 1) throw std::invalid_argument(name + ": row count must be at least 1");
    if (kind == ArrayKind::A1 && first_value < 1)
        throw std::invalid_argument("a1: first value must be positive");
    if (euclid_mod(first_value, lay.align) != 1)
        throw std::invalid_argument(name + ": first value " + std::to_string(first_value) + " is not 1 mod " +
                                    std::to_string(lay.align));

    std::int64_t last = 0;
    if (__builtin_mul_overflow(row_count, lay.stride, &last) || __builtin_add_overflow(first_value, last, &last))
        throw std::invalid_argument(name + ": rows extend past the 64-bit range");

    ArrayView view{.kind = kind};
    view.rows.reserve(static_cast<std::size_t>(row_count));
    for (std::int64_t r = 0; r < row_count; ++r) {
        const std::int64_t base = first_value + r * lay.stride;
        std::vector<Cell> row;
        row.reserve(static_cast<std::size_t>(lay.width));
        if (kind == ArrayKind::OA_EA) {
            for (std::int64_t shift : kOaEaShift) row.push_back(make_cell(base + shift));
        } else {
            for (std::int64_t c = 0; c < lay.width; ++c) row.push_back(make_cell(base + c));
        }
        view.rows.push_back(std::move(row));
    }
    return view;
}

void write_text(std::ostream& out, const ArrayView& view) {
    std::size_t width = 0;
    for (const auto& row : view.rows)
        for (const Cell& c : row) width = std::max(width, std::to_string(c.value).size());

    for (const auto& row : view.rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) line += (view.kind == ArrayKind::OA_EA && i == 3) ? " | " : "  ";
            const std::string v = std::to_string(row[i].value);
            line += letter(row[i].type);
            line += ' ';
            line += std::string(width - v.size(), ' ') + v;
        }
        out << line << '\n';
    }
}

void write_csv(std::ostream& out, const ArrayView& view) {
    switch (view.kind) {
        case ArrayKind::A1:
        case ArrayKind::A2_transition: out << "a,b,c,d,e,f,g,h,i\n"; break;
        case ArrayKind::A3: out << "col1,col2,col3\n"; break;
        case ArrayKind::OA_EA: out << "alpha,beta,gamma,delta,epsilon,zeta\n"; break;
    }
    for (const auto& row : view.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i > 0 ? "," : "") << letter(row[i].type) << ':' << row[i].value;
        out << '\n';
    }
}

}  // namespace primeclass
