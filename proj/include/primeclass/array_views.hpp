// array_views.hpp
// Text and CSV renderings of the number arrays:
//
//   A1     9 columns a..i, positive values ascending from a row start = 1 (mod 9)
//   A2     the same 9-column layout extended through 0 into the negatives
//   A3     3 columns (a b c / d e f / g h i), all integers ascending
//   OA_EA  per row, odd columns (alpha, beta, gamma) then even columns
//          (delta, epsilon, zeta); each column steps by 6

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "primeclass/residue.hpp"

namespace primeclass {

enum class ArrayKind { A1, A2_transition, A3, OA_EA };

// "a1", "a2", "a3", "oa-ea"
std::string_view array_kind_name(ArrayKind kind) noexcept;
std::optional<ArrayKind> array_kind_from_name(std::string_view name) noexcept;

struct Cell {
    TypeLetter type = TypeLetter::a;
    std::int64_t value = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct ArrayView {
    ArrayKind kind = ArrayKind::A1;
    // A1/A2: 9 cells per row. A3: 3 cells. OA_EA: 6 cells, odd triple then even triple.
    std::vector<std::vector<Cell>> rows;
};

// first_value alignment: A1 requires >= 1 and = 1 (mod 9); A2 = 1 (mod 9);
// A3 = 1 (mod 3); OA_EA = 1 (mod 6). Throws std::invalid_argument on a
// misaligned first_value, row_count < 1, or values leaving the int64 range.
ArrayView render(ArrayKind kind, std::int64_t first_value, std::int64_t row_count);

// Conventional starting point for a kind.
std::int64_t default_first_value(ArrayKind kind) noexcept;

// Fixed-width columns, cells as "<letter> <value>"; OA_EA separates the odd
// and even triples with " | ".
void write_text(std::ostream& out, const ArrayView& view);

// Header row, then one row per array row with "letter:value" cells.
void write_csv(std::ostream& out, const ArrayView& view);

}  // namespace primeclass
