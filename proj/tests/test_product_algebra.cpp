#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <sstream>
#include <cstdint>
#include <string_view>

#include "oracles.hpp"
#include "primeclass/product_algebra.hpp"

using namespace primeclass;

namespace {

// Matrix of products as printed, rows a..i.
constexpr std::array<std::string_view, 9> kPrintedM = {
    "a b c d e f g h i", "b d f h a c e g i", "c f i c f i c f i",
    "d h c g b f a e i", "e a f b g c h d i", "f c i f c i f c i",
    "g e c a h f d b i", "h g f e d c b a i", "i i i i i i i i i",
};

TypeLetter printed(std::size_t row, std::size_t col) { return *type_from_letter(kPrintedM[row][2 * col]); }

TypeLetter t(char c) { return *type_from_letter(c); }

struct PrintedRule {
    SixClass left, right, result;
    std::int64_t c0, c_left, c_right;
};

constexpr auto A = SixClass::alpha, B = SixClass::beta, G = SixClass::gamma, D = SixClass::delta,
               E = SixClass::epsilon, Z = SixClass::zeta;

// The seventeen printed identities, coefficients keyed to the left/right operand.
constexpr std::array<PrintedRule, 17> kPrintedRules = {{
    {A, A, A, 0, 1, 1}, {B, B, A, 4, 5, 5}, {A, B, B, 0, 5, 1}, {A, G, G, 0, 3, 1}, {A, D, D, 0, 4, 1},
    {A, E, E, 0, 2, 1}, {A, Z, Z, 0, 6, 1}, {B, G, G, 2, 3, 5}, {B, D, E, 3, 4, 5}, {B, E, D, 1, 2, 5},
    {B, Z, Z, 4, 6, 5}, {G, D, Z, 1, 4, 3}, {G, E, Z, 0, 2, 3}, {G, Z, Z, 2, 6, 3}, {D, E, E, 1, 2, 4},
    {D, Z, Z, 3, 6, 4}, {Z, Z, Z, 5, 6, 6},
}};

}  // namespace

TEST_CASE("stored matrix equals the printed table and the mod-9 rule") {
    const TypeTable& stored = stored_type_matrix();
    const TypeTable derived = derived_type_matrix();
    int agree = 0;
    for (std::size_t r = 0; r < 9; ++r) {
        for (std::size_t c = 0; c < 9; ++c) {
            CHECK(stored[r][c] == printed(r, c));
            CHECK(derived[r][c] == printed(r, c));
            const std::int64_t prod = static_cast<std::int64_t>((r + 1) * (c + 1)) % 9;
            CHECK(numeric_index(stored[r][c]) == (prod == 0 ? 9 : prod));
            agree += stored[r][c] == derived[r][c];
        }
    }
    CHECK(agree == 81);
}

TEST_CASE("type_product examples and structure") {
    CHECK(type_product(TypeLetter::b, TypeLetter::b) == TypeLetter::d);
    CHECK(type_product(TypeLetter::h, TypeLetter::h) == TypeLetter::a);
    CHECK(type_product(TypeLetter::i, TypeLetter::e) == TypeLetter::i);
    for (TypeLetter x : kAllTypes) {
        CHECK(type_product(TypeLetter::i, x) == TypeLetter::i);
        CHECK(type_product(x, TypeLetter::i) == TypeLetter::i);
        CHECK(type_product(TypeLetter::a, x) == x);
        for (TypeLetter y : kAllTypes) CHECK(type_product(x, y) == type_product(y, x));
    }
}

TEST_CASE("submatrices match the printed M1, M2, M3") {
    const auto m1 = submatrix(Submatrix::M1);
    const auto m2 = submatrix(Submatrix::M2);
    const auto m3 = submatrix(Submatrix::M3);
    CHECK(m1.at(t('d'), t('d')) == t('g'));
    CHECK(m2.at(t('e'), t('e')) == t('g'));
    CHECK(m3.at(t('b'), t('a')) == t('b'));
    CHECK_FALSE(m3.at(t('a'), t('b')).has_value());

    constexpr std::array<std::string_view, 3> printed_m1 = {"adg", "dga", "gad"};
    constexpr std::array<std::string_view, 3> printed_m2 = {"dag", "agd", "gda"};
    constexpr std::array<std::string_view, 3> printed_m3 = {"bhe", "ebh", "heb"};
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            CHECK(m1.cells[r][c] == t(printed_m1[r][c]));
            CHECK(m2.cells[r][c] == t(printed_m2[r][c]));
            CHECK(m3.cells[r][c] == t(printed_m3[r][c]));
            CHECK(numeric_index(m1.cells[r][c]) % 3 == 1);
            CHECK(numeric_index(m2.cells[r][c]) % 3 == 1);
            CHECK(numeric_index(m3.cells[r][c]) % 3 == 2);
        }
    }
}

TEST_CASE("class_product examples and commutativity") {
    CHECK(class_product(B, B) == A);
    CHECK(class_product(B, D) == E);
    CHECK(class_product(E, E) == D);
    for (SixClass x : kAllClasses)
        for (SixClass y : kAllClasses) {
            CHECK(class_product(x, y) == class_product(y, x));
            // oracle: multiply representatives and reduce by hand
            const std::int64_t r = oracle::floor_mod(offset(x) * offset(y), 6);
            CHECK(offset(class_product(x, y)) == (r == 0 ? 6 : r));
        }
}

TEST_CASE("product_rule reproduces every printed coefficient set") {
    for (const PrintedRule& p : kPrintedRules) {
        const ProductRule r = product_rule(p.left, p.right);
        CAPTURE(class_name(p.left));
        CAPTURE(class_name(p.right));
        CHECK(r.result == p.result);
        CHECK(r.c0 == p.c0);
        CHECK(r.c_left == p.c_left);
        CHECK(r.c_right == p.c_right);
    }
}

TEST_CASE("product_rule for the four pairs without a printed identity") {
    // (3+6a)(3+6b) = 9 + 18a + 18b + 36ab = 3 + 6(1 + 3a + 3b + 6ab)
    CHECK(product_rule(G, G) == ProductRule{G, G, G, 1, 3, 3});
    // (4+6a)(4+6b) = 16 + ... = 4 + 6(2 + 4a + 4b + 6ab)
    CHECK(product_rule(D, D) == ProductRule{D, D, D, 2, 4, 4});
    // (2+6a)(2+6b) = 4 + 6(2a + 2b + 6ab)
    CHECK(product_rule(E, E) == ProductRule{E, E, D, 0, 2, 2});
    // (2+6a)(6+6b) = 12 + ... = 6 + 6(1 + 6a + 2b + 6ab)
    CHECK(product_rule(E, Z) == ProductRule{E, Z, Z, 1, 6, 2});
}

TEST_CASE("product_rule swaps coefficients under operand swap") {
    const auto rules = all_product_rules();
    REQUIRE(rules.size() == 36);
    for (SixClass x : kAllClasses)
        for (SixClass y : kAllClasses) {
            const auto xy = product_rule(x, y), yx = product_rule(y, x);
            CHECK(xy.result == yx.result);
            CHECK(xy.c0 == yx.c0);
            CHECK(xy.c_left == yx.c_right);
            CHECK(xy.c_right == yx.c_left);
        }
}

TEST_CASE("product_rule exactness against direct multiplication") {
    for (const ProductRule& r : all_product_rules())
        for (std::int64_t nx = -60; nx <= 60; ++nx)
            for (std::int64_t ny = -60; ny <= 60; ++ny) {
                const std::int64_t x = offset(r.left) + 6 * nx, y = offset(r.right) + 6 * ny;
                const std::int64_t idx = r.c0 + r.c_left * nx + r.c_right * ny + 6 * nx * ny;
                if (offset(r.result) + 6 * idx != x * y) FAIL_CHECK(x << " * " << y);
            }
}

TEST_CASE("result_index reports overflow") {
    const auto r = product_rule(Z, Z);
    CHECK_THROWS_AS(r.result_index(INT64_C(3'000'000'000), INT64_C(3'000'000'000)), std::overflow_error);
    CHECK(r.result_index(0, 0) == 5);
}

TEST_CASE("verify_type_closure") {
    SUBCASE("limit 8 includes 8 * -1 = -8, type a") {
        const auto rep = verify_type_closure(8);
        CHECK(rep.passed);
        CHECK(rep.checks == 17 * 17);
        CHECK(type_of(8 * -1) == TypeLetter::a);
    }
    SUBCASE("limit 1") {
        const auto rep = verify_type_closure(1);
        CHECK(rep.passed);
        CHECK(rep.checks == 9);
    }
    SUBCASE("thread count does not change the report") {
        const auto one = verify_type_closure(300, {.threads = 1});
        const auto many = verify_type_closure(300, {.threads = 7});
        CHECK(one.passed);
        CHECK(many.passed);
        CHECK(one.checks == many.checks);
    }
    CHECK_THROWS_AS(verify_type_closure(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_type_closure(kMaxVerifyLimit + 1), std::invalid_argument);
}

TEST_CASE("verify_class_closure") {
    const auto rep = verify_class_closure(500, {.threads = 3});
    CHECK(rep.passed);
    CHECK(rep.checks == 1001ull * 1001ull);
    CHECK_FALSE(rep.counterexample.has_value());

    // 5 * 5 = 25, class alpha, index 4
    const auto d = decompose(5 * 5);
    CHECK(d.six_class == A);
    CHECK(d.index == 4);
    CHECK(product_rule(B, B).result_index(decompose(5).index, decompose(5).index) == 4);
    // identity: 1 is alpha with index 0
    for (std::int64_t k = -50; k <= 50; ++k) {
        const auto dk = decompose(k);
        const auto rule = product_rule(A, dk.six_class);
        CHECK(rule.result == dk.six_class);
        CHECK(rule.result_index(0, dk.index) == dk.index);
    }
}

TEST_CASE("verify_matrix asserts range(M2) = {a,d,g} and carries the note") {
    const auto rep = verify_matrix();
    CHECK(rep.passed);
    CHECK(rep.checks == 81 + 27);
    bool has_m2_note = false;
    for (const auto& n : rep.notes) has_m2_note = has_m2_note || n.find("range(M2) = {a,d,g}") != std::string::npos;
    CHECK(has_m2_note);
}

TEST_CASE("verify_product_rules") {
    const auto rep = verify_product_rules(20);
    CHECK(rep.passed);
    CHECK(rep.checks == 36u * 41u * 41u);
    CHECK_THROWS_AS(verify_product_rules(-1), std::invalid_argument);
}

TEST_CASE("print_report format") {
    VerificationReport rep{.name = "demo", .passed = false, .checks = 3};
    rep.counterexample = Counterexample{2, -3, "type c", "type i"};
    rep.notes.push_back("hello");
    std::ostringstream os;
    print_report(os, rep);
    CHECK(os.str() == "FAIL demo (3 checks)\n  counterexample: x=2 y=-3 expected type c, got type i\n  note: hello\n");
}

TEST_CASE("result_index at the int64 edges") {
    const auto r = product_rule(A, A);
    CHECK_THROWS_AS(r.result_index(INT64_MAX, INT64_MAX), std::overflow_error);
    CHECK_THROWS_AS(r.result_index(INT64_MIN, INT64_MAX), std::overflow_error);
    // (1 + 6a)(1 + 6b) with b = 0 is just the left operand
    CHECK(r.result_index(INT64_MAX / 2, 0) == INT64_MAX / 2);
}
