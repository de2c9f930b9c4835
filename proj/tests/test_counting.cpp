#include <doctest.h>

#include "lcdkit/counting.hpp"
#include "lcdkit/oracle.hpp"

using namespace lcdkit;
using namespace lcdkit::counting;

TEST_SUITE("counting") {

TEST_CASE("gaussian binomial fixed points") {
    CHECK(gaussian_binomial(5, 0, 2) == 1);
    CHECK(gaussian_binomial(0, 0, 7) == 1);
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(8, 4, 2) == 200787);
    CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), std::invalid_argument);
}

TEST_CASE("gaussian binomial is symmetric and counts subspaces") {
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            for (unsigned q : {2u, 3u, 4u, 5u}) {
                CHECK(gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q));
            }
        }
    }
    // enumeration cross-check at desk scale
    for (unsigned q : {2u, 3u}) {
        Field f(q);
        for (unsigned n = 1; n <= 4; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                std::size_t seen = 0;
                oracle::enumerate_codes(n, k, f, [&](const LinearCode&) { ++seen; });
                CHECK(BigInt(seen) == gaussian_binomial(n, k, q));
            }
        }
    }
}

TEST_CASE("binary group orders match brute force") {
    Field f2(2);
    CHECK(order_orthogonal_gf2(1) == 1);
    CHECK(order_orthogonal_gf2(2) == 2);
    CHECK(order_orthogonal_gf2(3) == 6);
    CHECK(order_orthogonal_gf2(4) == 48);
    for (unsigned k = 1; k <= 4; ++k) {
        CHECK(order_orthogonal_gf2(k) ==
              oracle::brute_force_group_order(oracle::GroupKind::OrthogonalGF2, k, f2));
    }
    CHECK(order_symplectic_gf2(2) == 6);  // all of GL_2(GF(2))
    CHECK(order_symplectic_gf2(4) == 720);
    CHECK(order_symplectic_gf2(6) == 1451520);  // 2^9 * 3 * 15 * 63
    for (unsigned k : {2u, 4u}) {
        CHECK(order_symplectic_gf2(k) ==
              oracle::brute_force_group_order(oracle::GroupKind::SymplecticGF2, k, f2));
    }
    CHECK_THROWS_AS(order_symplectic_gf2(3), std::invalid_argument);
}

TEST_CASE("odd-field orthogonal group orders match brute force") {
    CHECK(order_orthogonal_q(2, +1, 3) == 8);
    CHECK(order_orthogonal_q(3, +1, 3) == 48);
    CHECK(order_orthogonal_q(1, +1, 5) == 2);
    for (std::uint32_t q : {3u, 5u, 7u}) {
        Field f(q);
        for (int dc : {+1, -1}) {
            CHECK(order_orthogonal_q(2, dc, q) ==
                  oracle::brute_force_group_order(oracle::GroupKind::OrthogonalQ, 2, f, dc));
        }
    }
    Field f3(3);
    for (int dc : {+1, -1}) {
        CHECK(order_orthogonal_q(3, dc, 3) ==
              oracle::brute_force_group_order(oracle::GroupKind::OrthogonalQ, 3, f3, dc));
    }
    CHECK_THROWS_AS(order_orthogonal_q(2, +1, 2), std::invalid_argument);
}

TEST_CASE("binary LCD counts: fixed points") {
    CHECK(count_lcd_binary(3, 1, LcdType::OO) == 3);
    CHECK(count_lcd_binary(3, 1, LcdType::OE) == 1);
    CHECK(count_lcd_binary(3, 1, LcdType::EO) == 0);
    CHECK(count_lcd_binary(3, 1) == 4);
    CHECK(count_lcd_binary(4, 2) == 20);
    CHECK(count_lcd_binary(4, 2, LcdType::OO) == 12);
    CHECK(count_lcd_binary(4, 2, LcdType::OE) == 4);
    CHECK(count_lcd_binary(4, 2, LcdType::EO) == 4);
    CHECK_THROWS_AS(count_lcd_binary(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_lcd_binary(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(count_lcd_binary(4, 2, LcdType::Plus), std::invalid_argument);
}

TEST_CASE("binary LCD counts: partition and duality identities") {
    for (unsigned n = 2; n <= 32; ++n) {
        for (unsigned k = 1; k < n; ++k) {
            BigInt oo = count_lcd_binary(n, k, LcdType::OO);
            BigInt oe = count_lcd_binary(n, k, LcdType::OE);
            BigInt eo = count_lcd_binary(n, k, LcdType::EO);
            CHECK(oo + oe + eo == count_lcd_binary(n, k));
            CHECK(oe == count_lcd_binary(n, n - k, LcdType::EO));
            if ((n - k) % 2 == 1) CHECK(oe == 0);
            if (k % 2 == 1) CHECK(eo == 0);
        }
    }
}

TEST_CASE("binary LCD counts: orbit-stabilizer consistency") {
    for (unsigned n = 2; n <= 24; ++n) {
        BigInt on = order_orthogonal_gf2(n);
        for (unsigned k = 1; k < n; ++k) {
            CHECK(count_lcd_binary(n, k, LcdType::OO) * order_orthogonal_gf2(k) *
                      order_orthogonal_gf2(n - k) ==
                  on);
            if ((n - k) % 2 == 0) {
                CHECK(count_lcd_binary(n, k, LcdType::OE) * order_orthogonal_gf2(k) *
                          order_symplectic_gf2(n - k) ==
                      on);
            }
            if (k % 2 == 0) {
                CHECK(count_lcd_binary(n, k, LcdType::EO) * order_symplectic_gf2(k) *
                          order_orthogonal_gf2(n - k) ==
                      on);
            }
        }
    }
}

TEST_CASE("odd-field LCD counts: fixed points") {
    CHECK(count_lcd_q(3, 1, 3) == 9);
    CHECK(count_lcd_q(3, 1, 3, LcdType::Plus) == 3);
    CHECK(count_lcd_q(3, 1, 3, LcdType::Minus) == 6);
    CHECK_THROWS_AS(count_lcd_q(3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_lcd_q(3, 1, 3, LcdType::OO), std::invalid_argument);
    CHECK_THROWS_AS(count_lcd_q(3, 3, 3), std::invalid_argument);
}

TEST_CASE("odd-field LCD counts: plus and minus partition the total") {
    for (std::uint32_t q : {3u, 5u, 7u}) {
        for (unsigned n = 2; n <= 20; ++n) {
            for (unsigned k = 1; k < n; ++k) {
                CHECK(count_lcd_q(n, k, q, LcdType::Plus) +
                          count_lcd_q(n, k, q, LcdType::Minus) ==
                      count_lcd_q(n, k, q));
            }
        }
    }
}

TEST_CASE("odd-field LCD counts: orbit-stabilizer consistency") {
    for (std::uint32_t q : {3u, 5u}) {
        for (unsigned n = 2; n <= 12; ++n) {
            BigInt on = order_orthogonal_q(n, +1, q);
            for (unsigned k = 1; k < n; ++k) {
                CHECK(count_lcd_q(n, k, q, LcdType::Plus) * order_orthogonal_q(k, +1, q) *
                          order_orthogonal_q(n - k, +1, q) ==
                      on);
                CHECK(count_lcd_q(n, k, q, LcdType::Minus) * order_orthogonal_q(k, -1, q) *
                          order_orthogonal_q(n - k, -1, q) ==
                      on);
            }
        }
    }
}

TEST_CASE("g partial products decrease strictly") {
    for (unsigned q : {2u, 3u, 4u}) {
        BigRational prev = 2;
        for (unsigned m = 1; m <= 50; ++m) {
            BigRational g = g_partial(q, m);
            CHECK(g > 0);
            CHECK(g < prev);
            prev = g;
        }
    }
    // exact small case: (3/4)(15/16)(63/64)
    CHECK(g_partial(4, 3) == BigRational(2835, 4096));
}

TEST_CASE("asymptotic ratio report: binary density constant") {
    auto rep = asymptotic_ratio(16, 8, 2, RatioKind::TotalOverSubspaces);
    // limit = 1 / prod(1 + 2^-i) = 0.419422441795... (partial product, m = 64)
    CHECK(rep.limit_lower <= rep.limit_upper);
    CHECK(std::abs(rep.limit_estimate() - 0.419422441795) < 1e-9);
    CHECK(rep.gap_upper() < BigRational(1, 100));

    auto far = asymptotic_ratio(32, 16, 2, RatioKind::TotalOverSubspaces);
    CHECK(far.gap_upper() < BigRational(1, 10000));
    CHECK(far.gap_upper() < rep.gap_upper());
}

TEST_CASE("asymptotic ratio report: odd-odd kinds") {
    auto rep = asymptotic_ratio(20, 10, 2, RatioKind::OddOddOverPower);
    // limit = 1 / g_{4,inf} = 1.452353642450... (300-term partial product)
    CHECK(std::abs(rep.limit_estimate() - 1.452353642450) < 1e-9);
    CHECK(rep.gap_upper() < BigRational(1, 100));

    auto over_gauss = asymptotic_ratio(20, 10, 2, RatioKind::OddOddOverSubspaces);
    CHECK(over_gauss.gap_upper() < BigRational(1, 100));
    auto oe = asymptotic_ratio(20, 10, 2, RatioKind::OddEvenOverSubspaces);
    CHECK(oe.gap_upper() < BigRational(1, 100));
    auto eo = asymptotic_ratio(20, 10, 2, RatioKind::EvenOddOverSubspaces);
    CHECK(eo.gap_upper() < BigRational(1, 100));
    CHECK_THROWS_AS(asymptotic_ratio(20, 9, 2, RatioKind::OddEvenOverSubspaces),
                    std::invalid_argument);  // n-k odd
    CHECK_THROWS_AS(asymptotic_ratio(20, 9, 2, RatioKind::EvenOddOverSubspaces),
                    std::invalid_argument);  // k odd
}

TEST_CASE("asymptotic ratio report: odd-field halved constant") {
    auto plus = asymptotic_ratio(16, 8, 3, RatioKind::PlusOverSubspaces);
    auto minus = asymptotic_ratio(16, 8, 3, RatioKind::MinusOverSubspaces);
    // limit = 1 / (2 prod(1 + 3^-i)) = 0.319502288319... (300-term partial product)
    CHECK(std::abs(plus.limit_estimate() - 0.319502288319) < 1e-9);
    CHECK(plus.gap_upper() < BigRational(1, 100));
    CHECK(minus.gap_upper() < BigRational(1, 100));
    auto total = asymptotic_ratio(16, 8, 3, RatioKind::TotalOverSubspacesQ);
    CHECK(total.gap_upper() < BigRational(1, 100));
    CHECK_THROWS_AS(asymptotic_ratio(16, 8, 2, RatioKind::PlusOverSubspaces),
                    std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_ratio(16, 8, 3, RatioKind::TotalOverSubspaces),
                    std::invalid_argument);
}

}  // TEST_SUITE
