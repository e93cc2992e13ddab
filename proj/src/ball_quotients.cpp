#include "steklov/ball_quotients.hpp"

#include <algorithm>
#include <cmath>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr double kIntegralityTolerance = 1e-6;

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// Newton's identities: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} P_i, where
// P_i = tr(g^i). det(I - t g) = sum_k (-1)^k e_k t^k, and its reciprocal
// series satisfies p_m = -sum_{k=1}^{min(m,n)} c_k p_{m-k}.
template <class T>
std::vector<T> reciprocal_series(const SquareMatrix<T>& g, std::size_t max_degree) {
    const std::size_t n = g.size();
    std::vector<T> power_traces(n + 1, T(0));
    SquareMatrix<T> power = g;
    for (std::size_t i = 1; i <= n; ++i) {
        power_traces[i] = power.trace();
        if (i < n) power = power * g;
    }
    std::vector<T> e(n + 1, T(0));
    e[0] = T(1);
    for (std::size_t k = 1; k <= n; ++k) {
        T acc(0);
        for (std::size_t i = 1; i <= k; ++i) {
            T term = e[k - i] * power_traces[i];
            if (i % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e[k] = acc / T(static_cast<long>(k));
    }
    std::vector<T> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = (k % 2 == 0) ? T(e[k]) : T(-e[k]);

    std::vector<T> p(max_degree + 1, T(0));
    p[0] = T(1);
    for (std::size_t m = 1; m <= max_degree; ++m) {
        T acc(0);
        for (std::size_t k = 1; k <= std::min(m, n); ++k) acc -= c[k] * p[m - k];
        p[m] = acc;
    }
    return p;
}

}  // namespace

std::uint64_t harmonic_space_dimension(std::size_t n, std::size_t m) {
    if (n == 0) return m == 0 ? 1 : 0;
    const long ln = static_cast<long>(n), lm = static_cast<long>(m);
    Integer d = binomial(ln + lm - 1, lm) - binomial(ln + lm - 3, lm - 2);
    return d.get_ui();
}

std::vector<Rational> inverse_charpoly_series(const RationalMatrix& g, std::size_t max_degree) {
    return reciprocal_series(g, max_degree);
}

std::vector<double> inverse_charpoly_series(const RealMatrix& g, std::size_t max_degree) {
    return reciprocal_series(g, max_degree);
}

HarmonicDimensionTable invariant_harmonic_dims(const OrthogonalGroup& group, std::size_t max_degree) {
    HarmonicDimensionTable table{group.order(), std::vector<std::uint64_t>(max_degree + 1, 0)};
    const auto order = static_cast<long>(group.order());

    if (group.mode() == EntryMode::Exact) {
        std::vector<Rational> sums(max_degree + 1, Rational(0));
        for (const auto& g : group.exact_elements()) {
            const auto p = inverse_charpoly_series(g, max_degree);
            for (std::size_t m = 0; m <= max_degree; ++m) {
                sums[m] += p[m];
                if (m >= 2) sums[m] -= p[m - 2];
            }
        }
        for (std::size_t m = 0; m <= max_degree; ++m) {
            Rational avg = sums[m] / order;
            avg.canonicalize();
            if (!is_integer(avg) || sgn(avg) < 0) {
                throw NonIntegerDimension("degree " + std::to_string(m) + " averages to " + to_string(avg));
            }
            table.dims[m] = avg.get_num().get_ui();
        }
    } else {
        // Fixed summation order: element order, then degree.
        std::vector<double> sums(max_degree + 1, 0.0);
        for (const auto& g : group.elements()) {
            const auto p = inverse_charpoly_series(g, max_degree);
            for (std::size_t m = 0; m <= max_degree; ++m) {
                sums[m] += p[m] - (m >= 2 ? p[m - 2] : 0.0);
            }
        }
        for (std::size_t m = 0; m <= max_degree; ++m) {
            const double avg = sums[m] / static_cast<double>(order);
            const double nearest = std::round(avg);
            if (std::abs(avg - nearest) > kIntegralityTolerance || nearest < 0) {
                throw NonIntegerDimension("degree " + std::to_string(m) + " averages to " + std::to_string(avg));
            }
            table.dims[m] = static_cast<std::uint64_t>(nearest);
        }
    }
    return table;
}

SpectrumView quotient_ball_spectrum(const OrthogonalGroup& group, const Rational& radius, std::size_t max_degree) {
    const Rational r = Length(radius).value();
    const auto table = invariant_harmonic_dims(group, max_degree);
    SpectrumView view{SpectrumUnit::Absolute, {}};
    for (std::size_t m = 0; m <= max_degree; ++m) {
        const Rational value = Rational(static_cast<long>(m)) / r;
        for (std::uint64_t c = 0; c < table.dims[m]; ++c) view.values.push_back(value);
    }
    return view;
}

IsospectralVerdict steklov_isospectral_quotients(const OrthogonalGroup& first, const OrthogonalGroup& second,
                                                 std::size_t max_degree) {
    if (first.dim() != second.dim()) throw DomainError("groups act on spaces of different dimension");
    IsospectralVerdict verdict;
    verdict.max_degree = max_degree;
    verdict.first = invariant_harmonic_dims(first, max_degree);
    verdict.second = invariant_harmonic_dims(second, max_degree);
    for (std::size_t m = 0; m <= max_degree; ++m) {
        if (verdict.first.dims[m] != verdict.second.dims[m]) {
            verdict.first_difference = m;
            break;
        }
    }
    verdict.isospectral = !verdict.first_difference.has_value();
    return verdict;
}

bool same_operator(const FourierDTN& a, const FourierDTN& b) {
    return a.eigenvalue == b.eigenvalue && a.multiplicity == b.multiplicity;
}

FourierDTN dtn_disk(const Rational& radius, std::size_t max_mode) {
    const Rational r = Length(radius).value();
    FourierDTN dtn{"disk R=" + to_string(r), {}, {}};
    for (std::size_t j = 0; j <= max_mode; ++j) {
        dtn.eigenvalue.push_back(Rational(static_cast<long>(j)) / r);
        dtn.multiplicity.push_back(harmonic_space_dimension(2, j));
    }
    return dtn;
}

FourierDTN dtn_cone(std::size_t k, std::size_t max_mode) {
    if (k == 0) throw DomainError("cone order must be >= 1");
    const auto group = cyclic_rotation_group(k);
    const auto table = invariant_harmonic_dims(group, k * max_mode);
    const Rational radius(static_cast<long>(k));

    FourierDTN dtn{"cone k=" + std::to_string(k), std::vector<Rational>(max_mode + 1),
                   std::vector<std::uint64_t>(max_mode + 1, 0)};
    std::vector<bool> filled(max_mode + 1, false);
    for (std::size_t m = 0; m <= k * max_mode; ++m) {
        if (table.dims[m] == 0) continue;
        if (m % k != 0) {
            throw DomainError("invariant degree " + std::to_string(m) + " is not a multiple of " + std::to_string(k));
        }
        const std::size_t mode = m / k;
        dtn.eigenvalue[mode] = Rational(static_cast<long>(m)) / radius;
        dtn.multiplicity[mode] = table.dims[m];
        filled[mode] = true;
    }
    for (std::size_t j = 0; j <= max_mode; ++j) {
        if (!filled[j]) throw DomainError("arclength mode " + std::to_string(j) + " has no invariant eigenfunction");
    }
    return dtn;
}

}  // namespace steklov
