#include <doctest.h>

#include "steklov/errors.hpp"
#include "steklov/inverse.hpp"

using namespace steklov;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

SpectrumView view(SpectrumUnit unit, std::initializer_list<Rational> xs) { return {unit, xs}; }

}  // namespace

TEST_CASE("peel_progressions") {
    SUBCASE("unit disk in absolute units") {
        auto dec = peel_progressions(view(SpectrumUnit::Absolute, {0, 1, 1, 2, 2, 3, 3}));
        CHECK(dec == ArithmeticSpectrum(SpectrumUnit::Absolute, 1, {{q(1), 2}}));
    }
    SUBCASE("zeros only") {
        auto dec = peel_progressions(view(SpectrumUnit::PiScaled, {0, 0, 0}));
        CHECK(dec.zeros() == 3);
        CHECK(dec.progressions().empty());
    }
    SUBCASE("prefix cut through the top value") {
        auto dec = peel_progressions(view(SpectrumUnit::Absolute, {0, 1, 1, 2, 2, 3}));
        CHECK(dec == ArithmeticSpectrum(SpectrumUnit::Absolute, 1, {{q(1), 2}}));
    }
    SUBCASE("disk plus half-disk from 60 generated values") {
        auto original = canonical_spectrum(BoundaryData({q(1)}, {q(1)}));
        auto dec = peel_progressions(enumerate(original, 60));
        CHECK(dec == ArithmeticSpectrum(SpectrumUnit::PiScaled, 2, {{q(1), 1}, {q(2), 2}}));
    }
    SUBCASE("missing interior copy is an inconsistency") {
        CHECK_THROWS_AS(peel_progressions(view(SpectrumUnit::Absolute, {0, 1, 1, 2, 3})), PeelInconsistency);
        CHECK_THROWS_AS(peel_progressions(view(SpectrumUnit::Absolute, {0, 2, 3, 4, 5, 7, 8})), PeelInconsistency);
    }
    SUBCASE("empty view") {
        CHECK(peel_progressions(view(SpectrumUnit::PiScaled, {})).zeros() == 0);
    }
}

TEST_CASE("peel_progressions_approx matches within epsilon") {
    std::vector<double> values{0.0,       0.9999999, 1.0000001, 1.9999998, 2.0000002, 2.5,
                               2.9999999, 3.0000001, 3.9999999, 4.0000002, 5.0};
    auto dec = peel_progressions_approx(values, 1e-4);
    CHECK(dec.heuristic);
    CHECK(dec.zeros == 1);
    REQUIRE(dec.progressions.size() == 2);
    CHECK(dec.progressions[0].first == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(dec.progressions[0].second == 2);
    CHECK(dec.progressions[1].first == doctest::Approx(2.5).epsilon(1e-6));
    CHECK(dec.progressions[1].second == 1);

    std::vector<double> broken{0.0, 1.0, 1.0, 2.0, 3.1};
    CHECK_THROWS_AS(peel_progressions_approx(broken, 1e-3), PeelInconsistency);
    CHECK_THROWS_AS(peel_progressions_approx(values, 0.0), DomainError);
}

TEST_CASE("recover_boundary_class") {
    SUBCASE("single disk of length 2") {
        auto cls = recover_boundary_class(canonical_spectrum(BoundaryData({q(2)}, {})));
        CHECK(cls.r() == 1);
        CHECK(cls.s() == 0);
        CHECK(cls.merged_lengths() == std::vector<Rational>{2, 2});
    }
    SUBCASE("interchange pair recovers one class") {
        auto a = recover_boundary_class(canonical_spectrum(BoundaryData({q(2)}, {q(2), q(2)})));
        auto b = recover_boundary_class(canonical_spectrum(BoundaryData({q(4)}, {q(1), q(1)})));
        CHECK(a.r() == 1);
        CHECK(a.s() == 2);
        CHECK(a.merged_lengths() == std::vector<Rational>{2, 2, 4, 4});
        CHECK(a == b);
    }
    SUBCASE("z = 1, t = 3 is infeasible") {
        // z = r + s and t = 2r + s; enumerate small (r, s) to confirm (1, 3) never occurs.
        for (int r = 0; r <= 10; ++r)
            for (int s = 0; s <= 10; ++s) CHECK_FALSE((r + s == 1 && 2 * r + s == 3));
        ArithmeticSpectrum dec(SpectrumUnit::PiScaled, 1, {{q(1), 3}});
        CHECK_THROWS_AS(recover_boundary_class(dec), InfeasibleCounts);
    }
    SUBCASE("absolute unit is rejected") {
        ArithmeticSpectrum dec(SpectrumUnit::Absolute, 1, {{q(1), 2}});
        CHECK_THROWS_AS(recover_boundary_class(dec), DomainError);
    }
}

TEST_CASE("data_equivalent") {
    BoundaryData a({q(2)}, {q(2), q(2)});
    CHECK(data_equivalent(a, a));
    CHECK(data_equivalent(a, BoundaryData({q(4)}, {q(1), q(1)})));
    CHECK_FALSE(data_equivalent(BoundaryData({q(1)}, {}), BoundaryData({}, {q(1), q(1)})));
    CHECK_FALSE(data_equivalent(BoundaryData({q(1)}, {}), BoundaryData({}, {q(1, 2), q(1, 2)})));
}

TEST_CASE("enumerate_class_members") {
    CHECK(enumerate_class_members(BoundaryDataClass(1, 0, {2, 2})) == std::vector{BoundaryData({q(2)}, {})});

    auto members = enumerate_class_members(BoundaryDataClass(1, 2, {2, 2, 4, 4}));
    CHECK(members == std::vector{BoundaryData({q(2)}, {q(2), q(2)}), BoundaryData({q(4)}, {q(1), q(1)})});

    CHECK(enumerate_class_members(BoundaryDataClass(0, 3, {2, 4, 6})) ==
          std::vector{BoundaryData({}, {q(1), q(2), q(3)})});

    // Pairs of equal values: any pair can be the disk.
    auto three = enumerate_class_members(BoundaryDataClass(1, 4, {1, 1, 2, 2, 3, 3}));
    CHECK(three.size() == 3);

    CHECK_THROWS_AS(BoundaryDataClass(1, 0, {2, 3}), EmptyClass);
    CHECK_THROWS_AS(BoundaryDataClass(1, 1, {2, 2}), EmptyClass);
}

TEST_CASE("sufficient_prefix_length") {
    CHECK(sufficient_prefix_length(BoundaryData({q(1)}, {})) == 8);
    CHECK(sufficient_prefix_length(BoundaryData({q(1)}, {q(3)})) == 4 * 3 * 6);
}
