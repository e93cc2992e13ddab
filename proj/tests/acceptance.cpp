// Acceptance criteria 1-10. One PASS/FAIL line each; exit status 1 if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles/reynolds.hpp"
#include "steklov/ball_quotients.hpp"
#include "steklov/bounds.hpp"
#include "steklov/errors.hpp"
#include "steklov/inverse.hpp"
#include "steklov/spectra.hpp"
#include "steklov/sunada.hpp"

using namespace steklov;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_ms, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms < limit_ms;
    const bool pass = outcome.ok && in_time;
    failures += !pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << name << "  [" << ms << " ms, limit "
         << limit_ms << " ms]";
    if (!in_time) line << "  time limit exceeded";
    if (!outcome.detail.empty()) line << "  " << outcome.detail;
    std::cout << line.str() << std::endl;
}

std::vector<Rational> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

Outcome check(bool ok, const std::string& what) { return {ok, ok ? std::string() : what}; }

}  // namespace

int main() {
    std::cout.precision(4);

    criterion(1, "disk of length 2*pi: first 7 eigenvalues 0,1,1,2,2,3,3 (exact)", 1.0, [] {
        auto view = enumerate(canonical_disk_spectrum(Length(Rational(2)), LengthUnit::PiMultiple), 7);
        return check(view.values == ints({0, 1, 1, 2, 2, 3, 3}), "values differ");
    });

    criterion(2, "half-disk of length 1: 0,1,2,3,4,5 (x pi), multiplicity one (exact)", 1000.0, [] {
        auto view = enumerate(canonical_half_disk_spectrum(Length(Rational(1))), 6);
        std::set<Rational> distinct(view.values.begin(), view.values.end());
        return check(view.unit == SpectrumUnit::PiScaled && view.values == ints({0, 1, 2, 3, 4, 5}) &&
                         distinct.size() == 6,
                     "values or multiplicities differ");
    });

    criterion(3, "interchange isospectrality for three (l1, l2) pairs (exact)", 10.0, [] {
        const std::pair<Rational, Rational> pairs[] = {
            {Rational(1), Rational(2)}, {Rational(3), Rational(5)}, {Rational(1, 2), Rational(7, 3)}};
        for (const auto& [l1, l2] : pairs) {
            BoundaryData a({2 * l1}, {l2, l2});
            BoundaryData b({2 * l2}, {l1, l1});
            if (!(canonical_spectrum(a) == canonical_spectrum(b))) return Outcome{false, "canonical forms differ"};
            if (!data_equivalent(a, b)) return Outcome{false, "data_equivalent is false"};
        }
        return Outcome{};
    });

    criterion(4, "inverse round trip on 200 random boundary data (exact)", 5000.0, [] {
        std::mt19937_64 rng(20261016);
        auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
        int singleton_cases = 0;
        for (int t = 0; t < 200; ++t) {
            std::vector<Rational> one, two;
            int r = uni(0, 5), s = uni(0, 5);
            if (r + s == 0) (uni(0, 1) ? r : s) = 1;
            // A few repeated lengths so that non-singleton classes occur.
            std::vector<Rational> pool;
            for (int i = 0; i < 3; ++i) pool.push_back(make_rational(uni(1, 20), uni(1, 20)));
            auto pick = [&] { return uni(0, 1) ? pool[uni(0, 2)] : make_rational(uni(1, 20), uni(1, 20)); };
            for (int i = 0; i < r; ++i) one.push_back(pick());
            for (int i = 0; i < s; ++i) two.push_back(pick());
            BoundaryData bd(one, two);

            auto view = enumerate(canonical_spectrum(bd), sufficient_prefix_length(bd));
            auto members = enumerate_class_members(recover_boundary_class(peel_progressions(view)));
            if (std::find(members.begin(), members.end(), bd) == members.end()) {
                return Outcome{false, "case " + std::to_string(t) + ": original not in recovered class"};
            }
            std::set<Rational> distinct(two.begin(), two.end());
            if (one.empty() || two.empty() || distinct.size() == two.size()) {
                ++singleton_cases;
                if (members.size() != 1) return Outcome{false, "case " + std::to_string(t) + ": class not singleton"};
            }
        }
        return Outcome{true, "(" + std::to_string(singleton_cases) + " singleton cases)"};
    });

    criterion(5, "cone and disk DTN tables agree to mode 200, k = 1..10, plus the Z_k quotient path",
              1000.0, [] {
                  auto disk = dtn_disk(Rational(1), 200);
                  std::vector<Rational> expected{0};
                  for (int j = 1; j <= 20; ++j) expected.insert(expected.end(), 2, Rational(j));
                  for (std::size_t k = 1; k <= 10; ++k) {
                      if (!same_operator(dtn_cone(k, 200), disk)) {
                          return Outcome{false, "DTN tables differ at k = " + std::to_string(k)};
                      }
                      auto view = quotient_ball_spectrum(cyclic_rotation_group(k), Rational(k), 20 * k);
                      if (view.values != expected) {
                          return Outcome{false, "ball quotient spectrum differs at k = " + std::to_string(k)};
                      }
                  }
                  return Outcome{};
              });

    criterion(6, "harmonic dimensions equal Reynolds ranks, 8 groups, m <= 8 (exact / 1e-6 integrality)", 30000.0,
              [] {
                  const int o2_refl[] = {1, -1}, x[] = {1, -1, -1}, y[] = {-1, 1, -1}, z[] = {-1, -1, 1};
                  const int pxy[] = {1, 1, -1}, pxz[] = {1, -1, 1}, anti[] = {-1, -1, -1};
                  const std::vector<std::pair<std::string, OrthogonalGroup>> corpus{
                      {"trivial O(2)", trivial_group(2)},
                      {"Z2", cyclic_rotation_group(2)},
                      {"Z3", cyclic_rotation_group(3)},
                      {"Z4", cyclic_rotation_group(4)},
                      {"O(2) reflection", close_group({diagonal_signs(o2_refl)})},
                      {"Klein rotations", close_group({diagonal_signs(x), diagonal_signs(y), diagonal_signs(z)})},
                      {"Klein reflections", close_group({diagonal_signs(pxy), diagonal_signs(pxz)})},
                      {"antipodal O(3)", close_group({diagonal_signs(anti)})}};
                  std::string modes;
                  for (const auto& [name, group] : corpus) {
                      // invariant_harmonic_dims throws if an average is off an integer
                      // (exactly in rational mode, by more than 1e-6 in float mode).
                      auto dims = invariant_harmonic_dims(group, 8);
                      if (dims.dims != oracle::reynolds_dims(group, 8)) return Outcome{false, name + " differs"};
                      modes += group.mode() == EntryMode::Exact ? "E" : "F";
                  }
                  return Outcome{true, "(modes " + modes + ")"};
              });

    criterion(7, "Sunada examples: condition, permutation characters, ball spectra to M = 30 (exact)", 30000.0, [] {
        auto g = klein_four_group();
        SubgroupCollection h(g, {{0, 1}, {0, 2}, {0, 3}});
        SubgroupCollection k(g, {{0}, {0, 1, 2, 3}, {0, 1, 2, 3}});
        if (!sunada_condition(g, h, k).holds) return Outcome{false, "sunada_condition false"};
        if (!permutation_character_equal(g, h, k).equal) return Outcome{false, "permutation characters differ"};
        const int id[] = {1, 1, 1}, rx[] = {1, -1, -1}, ry[] = {-1, 1, -1}, rz[] = {-1, -1, 1};
        const int pxy[] = {1, 1, -1}, pxz[] = {1, -1, 1};
        auto rotations = realize(g, {diagonal_signs(id), diagonal_signs(rx), diagonal_signs(ry), diagonal_signs(rz)});
        // sigma, tau reflect across the xy- and xz-planes; sigma*tau is their product.
        auto reflections =
            realize(g, {diagonal_signs(id), diagonal_signs(pxy), diagonal_signs(pxz), diagonal_signs(rx)});
        if (!sunada_ball_check(g, rotations, h, k, 30).isospectral) return Outcome{false, "rotation quotients differ"};
        if (!sunada_ball_check(g, reflections, h, k, 30).isospectral) {
            return Outcome{false, "reflection quotients differ"};
        }
        return Outcome{};
    });

    criterion(8, "lens sharpness sigma2 = q^(1/m) for m in {2,3}, j = 2..6 (exact)", 10000.0, [] {
        for (std::int64_t m = 2; m <= 3; ++m)
            for (std::int64_t j = 2; j <= 6; ++j) {
                if (!verify_sharpness_family(j, m)) {
                    return Outcome{false, "fails at j = " + std::to_string(j) + ", m = " + std::to_string(m)};
                }
            }
        return Outcome{};
    });

    criterion(9, "Euler characteristic: cones give 1/k, double covers give 2 chi (exact)", 1000.0, [] {
        for (std::uint64_t k : {2u, 3u, 5u}) {
            if (euler_characteristic(cone_complex(k)) != Rational(1, k)) return Outcome{false, "cone value"};
            // The order-k cone double covers the order-2k cone.
            if (euler_characteristic(cone_complex(k)) != 2 * euler_characteristic(cone_complex(2 * k))) {
                return Outcome{false, "cone double cover"};
            }
        }
        if (euler_characteristic(disk_complex()) != 2 * euler_characteristic(cone_complex(2))) {
            return Outcome{false, "disk double cover"};
        }
        return Outcome{};
    });

    criterion(10, "property suite (>= 100 cases per invariant)", 300000.0, [] {
        const std::string cmd = std::string("'") + STEKLOV_PROPERTY_TESTS_PATH + "' --minimal 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return Outcome{false, "cannot start property suite"};
        std::string out;
        char buf[4096];
        while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
        const int status = pclose(pipe);
        const bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
        return Outcome{ok, ok ? std::string() : out};
    });

    return failures == 0 ? 0 : 1;
}
