#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "steklov/spectra.hpp"

namespace steklov {

/// Zeros plus arithmetic progressions recovered from a spectrum prefix. Same
/// normal form as ArithmeticSpectrum.
using ProgressionDecomposition = ArithmeticSpectrum;

/// Equivalence class of boundary data: (r, s) together with the multiset
/// L + L + 2*Lbar, kept sorted.
class BoundaryDataClass {
public:
    /// Throws EmptyClass when no split of `merged_lengths` into r equal pairs
    /// plus s leftovers exists.
    BoundaryDataClass(std::size_t r, std::size_t s, std::vector<Rational> merged_lengths);

    std::size_t r() const noexcept { return r_; }
    std::size_t s() const noexcept { return s_; }
    const std::vector<Rational>& merged_lengths() const noexcept { return merged_; }

    friend bool operator==(const BoundaryDataClass&, const BoundaryDataClass&) = default;

private:
    std::size_t r_;
    std::size_t s_;
    std::vector<Rational> merged_;
};

/// Greedy progression peeling of an exact spectrum prefix.
///
/// The smallest remaining positive value d, with remaining multiplicity mu,
/// starts mu progressions of difference d; mu copies of d, 2d, ... up to the
/// largest value of the view are removed and the process repeats. Copies of
/// the largest value may be missing (the prefix can cut through it). The
/// result is re-enumerated and must reproduce the view exactly.
///
/// Throws PeelInconsistency when the prefix is not of that form or is too
/// short to tell.
ProgressionDecomposition peel_progressions(const SpectrumView& view);

/// Result of the tolerance-based peeling of a floating-point spectrum. This is
/// a heuristic: values are matched within an additive epsilon.
struct ApproxDecomposition {
    std::uint64_t zeros = 0;
    std::vector<std::pair<double, std::uint64_t>> progressions;
    bool heuristic = true;
};

/// Same greedy procedure as peel_progressions, on sorted doubles, with every
/// comparison made within `epsilon`. Throws PeelInconsistency on underflow.
ApproxDecomposition peel_progressions_approx(std::span<const double> values, double epsilon);

/// Boundary class of a PiScaled decomposition: r = t - z, s = 2z - t where z is
/// the zero count and t the total multiplicity, and each progression (d, mu)
/// contributes mu copies of 2/d to the merged lengths.
BoundaryDataClass recover_boundary_class(const ProgressionDecomposition& decomposition);

/// The class a given boundary datum belongs to.
BoundaryDataClass boundary_class_of(const BoundaryData& data);

/// Same (r, s) and equal L + L + 2*Lbar as multisets.
bool data_equivalent(const BoundaryData& a, const BoundaryData& b);

/// Every boundary datum in the class, sorted and without duplicates.
std::vector<BoundaryData> enumerate_class_members(const BoundaryDataClass& cls);

/// Prefix length that suffices for the round trip through peel_progressions:
/// 4 * (2r + s) * ceil(max merged length / min merged length), at least 1.
std::size_t sufficient_prefix_length(const BoundaryData& data);

}  // namespace steklov
