#include "primeclass/residue.hpp"

#include <limits>
#include <stdexcept>

namespace primeclass {

namespace {

__extension__ using Wide = __int128;

// Euclidean remainder in [0, m).
constexpr std::int64_t euclid_mod(std::int64_t n, std::int64_t m) noexcept {
    const std::int64_t r = n % m;
    return r < 0 ? r + m : r;
}

constexpr std::array<std::string_view, 6> kClassNames = {
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta"};

}  // namespace

std::string_view class_name(SixClass c) noexcept {
    return kClassNames[static_cast<std::size_t>(c)];
}

std::optional<SixClass> class_from_name(std::string_view name) noexcept {
    for (SixClass c : kAllClasses)
        if (class_name(c) == name) return c;
    return std::nullopt;
}

int digital_root(std::int64_t n) {
    if (n <= 0) throw std::domain_error("digital_root: argument must be positive");
    while (n >= 10) {
        std::int64_t sum = 0;
        for (; n > 0; n /= 10) sum += n % 10;
        n = sum;
    }
    return static_cast<int>(n);
}

TypeLetter type_of(std::int64_t n) noexcept {
    const auto r = euclid_mod(n, 9);
    return static_cast<TypeLetter>(r == 0 ? 9 : r);
}

SixClass class_of(std::int64_t n) noexcept {
    const auto r = euclid_mod(n, 6);
    return *class_from_offset(static_cast<int>(r == 0 ? 6 : r));
}

ClassifiedInteger decompose(std::int64_t n) noexcept {
    // floor(n / 6) computed without forming n - offset, which can overflow near INT64_MIN.
    const std::int64_t r = euclid_mod(n, 6);
    const std::int64_t q = n / 6 - (n % 6 < 0 ? 1 : 0);
    return ClassifiedInteger{
        .value = n,
        .type = type_of(n),
        .six_class = class_of(n),
        .index = r == 0 ? q - 1 : q,
    };
}

std::int64_t compose(SixClass c, std::int64_t index) {
    // 6*index alone can leave the int64 range while offset + 6*index does not.
    const Wide wide = static_cast<Wide>(index) * 6 + offset(c);
    if (wide < std::numeric_limits<std::int64_t>::min() || wide > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("compose: value does not fit in a 64-bit signed integer");
    return static_cast<std::int64_t>(wide);
}

std::array<TypeLetter, 3> compatible_types(SixClass c) noexcept {
    using T = TypeLetter;
    switch (c) {
        case SixClass::alpha:
        case SixClass::delta: return {T::a, T::d, T::g};
        case SixClass::beta:
        case SixClass::epsilon: return {T::b, T::e, T::h};
        case SixClass::gamma:
        case SixClass::zeta: break;
    }
    return {T::c, T::f, T::i};
}

}  // namespace primeclass
