#pragma once

#include <cstdint>
#include <vector>

#include "steklov/rational.hpp"

namespace steklov {

/// Spectra of canonical orbisurfaces with plain rational boundary lengths are
/// rational multiples of pi and are stored as the coefficient of pi
/// (PiScaled). Ball quotients, and orbisurfaces whose lengths are given as
/// rational multiples of pi, have plain rational eigenvalues (Absolute).
enum class SpectrumUnit { PiScaled, Absolute };

/// How the numbers in a BoundaryData are to be read: as the length itself,
/// or as the coefficient c of a length c*pi.
enum class LengthUnit { Plain, PiMultiple };

const char* unit_name(SpectrumUnit unit);
SpectrumUnit spectrum_unit_for(LengthUnit unit);

/// A strictly positive rational boundary length.
class Length {
public:
    explicit Length(Rational value);

    const Rational& value() const noexcept { return value_; }

    friend bool operator==(const Length&, const Length&) = default;
    friend auto operator<=>(const Length& a, const Length& b) { return cmp(a.value_, b.value_) <=> 0; }

private:
    Rational value_;
};

/// Boundary data (L; Lbar): lengths of the type I (circle) and type II
/// (mirrored segment) boundary components. Both multisets are kept sorted so
/// that equal multisets compare equal.
class BoundaryData {
public:
    BoundaryData() = default;
    BoundaryData(std::vector<Rational> type_one, std::vector<Rational> type_two,
                 LengthUnit unit = LengthUnit::Plain);

    const std::vector<Rational>& type_one() const noexcept { return type_one_; }
    const std::vector<Rational>& type_two() const noexcept { return type_two_; }
    LengthUnit unit() const noexcept { return unit_; }
    std::size_t r() const noexcept { return type_one_.size(); }
    std::size_t s() const noexcept { return type_two_.size(); }

    friend bool operator==(const BoundaryData&, const BoundaryData&) = default;
    friend bool operator<(const BoundaryData& a, const BoundaryData& b);

private:
    std::vector<Rational> type_one_;
    std::vector<Rational> type_two_;
    LengthUnit unit_ = LengthUnit::Plain;
};

struct Progression {
    Rational difference;
    std::uint64_t multiplicity = 0;

    friend bool operator==(const Progression&, const Progression&) = default;
};

/// Exact normal form of a spectrum {0}^zeros disjoint-union the progressions
/// d*N (N = {1, 2, ...}), each repeated `multiplicity` times. Progressions are
/// sorted by difference with equal differences merged.
class ArithmeticSpectrum {
public:
    ArithmeticSpectrum() = default;
    ArithmeticSpectrum(SpectrumUnit unit, std::uint64_t zeros, std::vector<Progression> progressions);

    SpectrumUnit unit() const noexcept { return unit_; }
    std::uint64_t zeros() const noexcept { return zeros_; }
    const std::vector<Progression>& progressions() const noexcept { return progressions_; }

    std::uint64_t total_multiplicity() const;
    bool is_finite() const noexcept { return progressions_.empty(); }

    friend bool operator==(const ArithmeticSpectrum&, const ArithmeticSpectrum&) = default;

private:
    SpectrumUnit unit_ = SpectrumUnit::PiScaled;
    std::uint64_t zeros_ = 0;
    std::vector<Progression> progressions_;
};

/// The first few eigenvalues of a spectrum, with multiplicity.
struct SpectrumView {
    SpectrumUnit unit = SpectrumUnit::PiScaled;
    std::vector<Rational> values;

    friend bool operator==(const SpectrumView&, const SpectrumView&) = default;
};

/// Throws DomainError unless the values are non-negative and non-decreasing.
void validate_view(const SpectrumView& view);

ArithmeticSpectrum canonical_disk_spectrum(const Length& length, LengthUnit unit = LengthUnit::Plain);
ArithmeticSpectrum canonical_half_disk_spectrum(const Length& length, LengthUnit unit = LengthUnit::Plain);

/// Spectrum of the canonical orbisurface with the given boundary data: one
/// flat disk per type I length and one flat half-disk per type II length.
ArithmeticSpectrum canonical_spectrum(const BoundaryData& data);

/// Multiset union of two spectra of the same unit.
ArithmeticSpectrum disjoint_union(const ArithmeticSpectrum& a, const ArithmeticSpectrum& b);

/// First min(n, size) eigenvalues in non-decreasing order. n must be >= 1.
SpectrumView enumerate(const ArithmeticSpectrum& spectrum, std::size_t n);

/// Exact equality of normal forms; spectra of different units are an error.
bool spectra_equal(const ArithmeticSpectrum& a, const ArithmeticSpectrum& b);

}  // namespace steklov
