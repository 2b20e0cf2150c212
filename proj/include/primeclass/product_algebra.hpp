// product_algebra.hpp
// Type-level matrix of products M (9x9, mod 9) with its 3x3 submatrices,
// the Class-level product table (mod 6), and exhaustive verifiers.
//
// For classes L, R with offsets l, r and indices nl, nr:
//
//   (l + 6 nl)(r + 6 nr) = res + 6 (c0 + r*nl + l*nr + 6 nl nr)
//
// where res is the offset of the product class and c0 = (l*r - res) / 6.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primeclass/report.hpp"
#include "primeclass/residue.hpp"

namespace primeclass {

using TypeTable = std::array<std::array<TypeLetter, 9>, 9>;

// The matrix M as printed, row-major over a..i.
const TypeTable& stored_type_matrix() noexcept;

// The same matrix rebuilt from the mod-9 rule.
TypeTable derived_type_matrix() noexcept;

TypeLetter type_product(TypeLetter x, TypeLetter y) noexcept;

enum class Submatrix { M1, M2, M3 };

struct TypeSubmatrix {
    std::array<TypeLetter, 3> rows;
    std::array<TypeLetter, 3> cols;
    std::array<std::array<TypeLetter, 3>, 3> cells;

    // Entry at (row letter, column letter); nullopt if either is outside the submatrix.
    std::optional<TypeLetter> at(TypeLetter row, TypeLetter col) const noexcept;
};

// M1: {a,d,g} x {a,d,g}.  M2: {b,e,h} x {b,e,h}.  M3: rows {b,e,h}, columns {a,d,g}.
TypeSubmatrix submatrix(Submatrix which) noexcept;

SixClass class_product(SixClass x, SixClass y) noexcept;

struct ProductRule {
    SixClass left = SixClass::alpha;
    SixClass right = SixClass::alpha;
    SixClass result = SixClass::alpha;
    std::int64_t c0 = 0;
    std::int64_t c_left = 0;   // coefficient on the left operand's index
    std::int64_t c_right = 0;  // coefficient on the right operand's index

    // c0 + c_left*nl + c_right*nr + 6*nl*nr. Throws std::overflow_error.
    std::int64_t result_index(std::int64_t left_index, std::int64_t right_index) const;

    friend bool operator==(const ProductRule&, const ProductRule&) = default;
};

ProductRule product_rule(SixClass x, SixClass y) noexcept;

// All 36 ordered pairs, left-major in kAllClasses order.
std::vector<ProductRule> all_product_rules();

// Largest accepted limit for the exhaustive closure verifiers (4e12 products).
inline constexpr std::int64_t kMaxVerifyLimit = 1'000'000;

struct VerifyOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
};

// type_of(x*y) == type_product(type_of(x), type_of(y)) for all |x|,|y| <= limit,
// plus: any product with an operand of type c, f or i lands in {c,f,i}.
// Reported counterexample is the one with the smallest (|x|,|y|, x, y).
// Throws std::invalid_argument for limit outside [1, kMaxVerifyLimit].
VerificationReport verify_type_closure(std::int64_t limit, VerifyOptions opts = {});

// class_of(x*y) == class_product(...) and the product_rule index formula,
// for all |x|,|y| <= limit.
VerificationReport verify_class_closure(std::int64_t limit, VerifyOptions opts = {});

// Stored M == derived M, and the submatrix ranges: M1 and M2 land in {a,d,g},
// M3 lands in {b,e,h}. Emits a note on the M2 range.
VerificationReport verify_matrix();

// Exhaustive check of every ordered class pair over index range [-bound, bound].
VerificationReport verify_product_rules(std::int64_t bound);

}  // namespace primeclass
