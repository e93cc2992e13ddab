#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles/brute_force.hpp"
#include "steklov/bounds.hpp"
#include "steklov/errors.hpp"

using namespace steklov;

TEST_CASE("LensParams") {
    LensParams params(5, {7, -1});
    CHECK(params.p() == std::vector<std::int64_t>{2, 4});
    CHECK(params.n() == 4);
    CHECK(LensParams(1, {3}).trivial());
    CHECK(LensParams(4, {4, 8}).trivial());
    CHECK_FALSE(params.trivial());
    CHECK_THROWS_AS(LensParams(0, {1}), DomainError);
    CHECK_THROWS_AS(LensParams(3, {}), DomainError);
}

TEST_CASE("sigma2_lens") {
    CHECK(sigma2_lens(LensParams(1, {1})).sigma2 == 1);
    CHECK(sigma2_lens(LensParams(9, {1, 3})).sigma2 == 3);

    SUBCASE("q = 5, p = (1, 2): shells 1 and 2 are empty") {
        auto r = sigma2_lens(LensParams(5, {1, 2}));
        CHECK(r.sigma2 == oracle::box_lattice_minimum(5, {1, 2}, 5));
        CHECK(r.sigma2 == 3);
    }
    SUBCASE("witness is a nonzero lattice vector of the reported norm") {
        LensParams params(37, {1, 10, 26});
        auto r = sigma2_lens(params);
        std::int64_t dot = 0, norm = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            dot += r.witness[i] * params.p()[i];
            norm += std::llabs(r.witness[i]);
        }
        CHECK(norm == r.sigma2);
        CHECK(((dot % 37) + 37) % 37 == 0);
        CHECK(r.sigma2 == oracle::box_lattice_minimum(37, {1, 10, 26}, 12));
    }
    SUBCASE("m = 1: q / gcd(p, q)") {
        CHECK(sigma2_lens(LensParams(12, {8})).sigma2 == 3);
        CHECK(sigma2_lens(LensParams(7, {3})).sigma2 == 7);
    }
}

TEST_CASE("sharpness family") {
    CHECK(verify_sharpness_family(2, 2));
    CHECK(verify_sharpness_family(2, 3));
    CHECK(verify_sharpness_family(1, 2));
    CHECK(sharpness_params(3, 2).q() == 9);
    CHECK(sharpness_params(3, 2).p() == std::vector<std::int64_t>{1, 3});
    auto r = sigma2_lens(sharpness_params(3, 3));
    CHECK(r.sigma2 == 3);
    CHECK_THROWS_AS(verify_sharpness_family(1000, 7), DomainError);
}

TEST_CASE("isoperimetric_quotient") {
    auto same = isoperimetric_quotient(Rational(7, 3), 1, 3);
    REQUIRE(same.exact);
    CHECK(*same.exact == Rational(7, 3));

    auto sixteen = isoperimetric_quotient(Rational(5), 16, 4);
    REQUIRE(sixteen.exact);
    CHECK(*sixteen.exact == Rational(5, 2));
    CHECK(sixteen.value == doctest::Approx(2.5));

    SUBCASE("unit disk and its order-3 cone") {
        // I(Omega) = perimeter / area^{1/2}; the cone divides both by 3.
        const double pi = std::numbers::pi;
        const double disk = 2 * pi / std::sqrt(pi);
        const double cone = (2 * pi / 3) / std::sqrt(pi / 3);
        auto r = isoperimetric_quotient(Rational(1), 3, 2);
        CHECK_FALSE(r.exact);
        CHECK(r.value * disk == doctest::Approx(cone).epsilon(1e-12));
    }
    CHECK_THROWS_AS(isoperimetric_quotient(Rational(0), 2, 2), DomainError);
    CHECK_THROWS_AS(isoperimetric_quotient(Rational(1), 0, 2), DomainError);
    CHECK_THROWS_AS(isoperimetric_quotient(Rational(1), 2, 1), DomainError);
}

TEST_CASE("euler_characteristic") {
    CHECK(euler_characteristic(disk_complex()) == 1);
    for (std::uint64_t k : {2u, 3u, 5u}) CHECK(euler_characteristic(cone_complex(k)) == Rational(1, k));
    // The disk double covers the order-2 cone; C_k double covers C_{2k}.
    CHECK(euler_characteristic(disk_complex()) == 2 * euler_characteristic(cone_complex(2)));
    CHECK(euler_characteristic(cone_complex(3)) == 2 * euler_characteristic(cone_complex(6)));
    CHECK(euler_characteristic(disjoint_union(disk_complex(), cone_complex(4))) == Rational(5, 4));
    CHECK(euler_characteristic(CellComplex{}) == 0);
    CHECK_THROWS_AS(euler_characteristic(CellComplex{{{3, 1}}}), DomainError);
    CHECK_THROWS_AS(euler_characteristic(CellComplex{{{1, 0}}}), DomainError);
}

TEST_CASE("bound_regime") {
    auto disk = bound_regime({Rational(1), 1, 0}, 4, Rational(1), Rational(10));
    CHECK(disk.regime == Regime::NonnegativeExcess);
    CHECK(disk.excess == 2);
    CHECK(disk.rhs == 40);

    auto negative = bound_regime({Rational(-3), 1, 0}, 1, Rational(1), Rational(1));
    CHECK(negative.regime == Regime::NegativeExcess);
    CHECK(negative.excess == -2);
    CHECK(negative.rhs == 3);

    auto half = bound_regime({Rational(-2), 1, 1}, 1, Rational(2), Rational(1));
    CHECK(half.excess == Rational(-1, 2));
    CHECK(half.rhs == 2);

    for (std::uint64_t k0 : {1u, 2u, 7u}) {
        auto cone = bound_regime({Rational(1, k0), 1, 0}, 3, Rational(5), Rational(1), ConformalFlag::Zero);
        CHECK(cone.regime == Regime::NonnegativeExcess);
        CHECK(cone.conformal == ConformalFlag::Zero);
    }
    CHECK_THROWS_AS(bound_regime({Rational(0), 0, 0}, 1, Rational(0), Rational(1)), DomainError);
    CHECK_THROWS_AS(bound_regime({Rational(0), 0, 0}, 0, Rational(1), Rational(1)), DomainError);
}
