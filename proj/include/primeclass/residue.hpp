// residue.hpp
// Digital-root Types (a..i, residue mod 9) and mod-6 Classes (alpha..zeta)
// for signed 64-bit integers.
//
//   Type:  numeric index 1..9, index 9 (letter i) stands for residue 0 mod 9.
//   Class: offset 1..6, value = offset + 6*n for a unique class index n.
//
//     alpha = 1 + 6n   beta    = 5 + 6n   gamma = 3 + 6n
//     delta = 4 + 6n   epsilon = 2 + 6n   zeta  = 6 + 6n
//
// Negative values use Euclidean reduction, so -1 is h and -8 is a.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace primeclass {

enum class TypeLetter : std::uint8_t { a = 1, b, c, d, e, f, g, h, i };

enum class SixClass : std::uint8_t { alpha, beta, gamma, delta, epsilon, zeta };

inline constexpr std::array<TypeLetter, 9> kAllTypes = {
    TypeLetter::a, TypeLetter::b, TypeLetter::c, TypeLetter::d, TypeLetter::e,
    TypeLetter::f, TypeLetter::g, TypeLetter::h, TypeLetter::i};

inline constexpr std::array<SixClass, 6> kAllClasses = {
    SixClass::alpha, SixClass::beta,    SixClass::gamma,
    SixClass::delta, SixClass::epsilon, SixClass::zeta};

constexpr int numeric_index(TypeLetter t) noexcept { return static_cast<int>(t); }

constexpr char letter(TypeLetter t) noexcept {
    return static_cast<char>('a' + numeric_index(t) - 1);
}

// Index 1..9; anything else yields nullopt.
constexpr std::optional<TypeLetter> type_from_index(int idx) noexcept {
    if (idx < 1 || idx > 9) return std::nullopt;
    return static_cast<TypeLetter>(idx);
}

constexpr std::optional<TypeLetter> type_from_letter(char c) noexcept {
    if (c < 'a' || c > 'i') return std::nullopt;
    return static_cast<TypeLetter>(c - 'a' + 1);
}

constexpr int offset(SixClass c) noexcept {
    constexpr std::array<int, 6> offsets = {1, 5, 3, 4, 2, 6};
    return offsets[static_cast<std::size_t>(c)];
}

// Offset 1..6; anything else yields nullopt.
constexpr std::optional<SixClass> class_from_offset(int off) noexcept {
    switch (off) {
        case 1: return SixClass::alpha;
        case 5: return SixClass::beta;
        case 3: return SixClass::gamma;
        case 4: return SixClass::delta;
        case 2: return SixClass::epsilon;
        case 6: return SixClass::zeta;
        default: return std::nullopt;
    }
}

// ASCII label: "alpha", "beta", ...
std::string_view class_name(SixClass c) noexcept;
std::optional<SixClass> class_from_name(std::string_view name) noexcept;

struct ClassifiedInteger {
    std::int64_t value = 0;
    TypeLetter type = TypeLetter::i;
    SixClass six_class = SixClass::zeta;
    std::int64_t index = 0;

    friend bool operator==(const ClassifiedInteger&, const ClassifiedInteger&) = default;
};

// Repeated decimal digit sum. Throws std::domain_error for n <= 0.
int digital_root(std::int64_t n);

TypeLetter type_of(std::int64_t n) noexcept;
SixClass class_of(std::int64_t n) noexcept;
ClassifiedInteger decompose(std::int64_t n) noexcept;

// offset(c) + 6*index. Throws std::overflow_error if the result does not fit.
std::int64_t compose(SixClass c, std::int64_t index);

// The three Types a value of class c can take: {a,d,g}, {b,e,h} or {c,f,i}.
std::array<TypeLetter, 3> compatible_types(SixClass c) noexcept;

}  // namespace primeclass
