#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steklov/matrix_group.hpp"
#include "steklov/spectra.hpp"

namespace steklov {

/// d(m) for m = 0..max_degree: dimension of the Gamma-invariant homogeneous
/// harmonic polynomials of degree m. d(m) is the multiplicity of the
/// eigenvalue m/R on Gamma \ B(0, R).
struct HarmonicDimensionTable {
    std::size_t group_order = 0;
    std::vector<std::uint64_t> dims;

    std::size_t max_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
    friend bool operator==(const HarmonicDimensionTable&, const HarmonicDimensionTable&) = default;
};

/// dim H_m(R^n) = C(n+m-1, m) - C(n+m-3, m-2).
std::uint64_t harmonic_space_dimension(std::size_t n, std::size_t m);

/// Coefficients p_0..p_max of 1/det(I - t*g), by Newton's identities on the
/// traces of the powers of g.
std::vector<Rational> inverse_charpoly_series(const RationalMatrix& g, std::size_t max_degree);
std::vector<double> inverse_charpoly_series(const RealMatrix& g, std::size_t max_degree);

/// Character averaging: d(m) = (1/|G|) sum_g (p_m(g) - p_{m-2}(g)). Exact
/// groups must average to an integer exactly; float groups to within 1e-6.
/// Throws NonIntegerDimension otherwise.
HarmonicDimensionTable invariant_harmonic_dims(const OrthogonalGroup& group, std::size_t max_degree);

/// Eigenvalues m/R with multiplicity d(m), 0 <= m <= max_degree, in the
/// Absolute unit.
SpectrumView quotient_ball_spectrum(const OrthogonalGroup& group, const Rational& radius, std::size_t max_degree);

struct IsospectralVerdict {
    bool isospectral = false;
    std::size_t max_degree = 0;                      // verdict holds only up to this degree
    std::optional<std::size_t> first_difference;     // smallest degree where the tables differ
    HarmonicDimensionTable first;
    HarmonicDimensionTable second;
};

/// Gamma_1 \ B and Gamma_2 \ B (same radius) are Steklov isospectral up to
/// degree M iff their invariant harmonic dimensions agree for m <= M.
IsospectralVerdict steklov_isospectral_quotients(const OrthogonalGroup& first, const OrthogonalGroup& second,
                                                 std::size_t max_degree);

/// Dirichlet-to-Neumann operator diagonalized in the arclength Fourier modes
/// cos(js), sin(js) of a boundary circle: the eigenvalue on mode j and the
/// dimension of that eigenspace.
struct FourierDTN {
    std::string label;
    std::vector<Rational> eigenvalue;
    std::vector<std::uint64_t> multiplicity;

    std::size_t modes() const { return eigenvalue.size(); }
};

/// Same eigenvalue and eigenspace dimension on every mode (labels ignored).
bool same_operator(const FourierDTN& a, const FourierDTN& b);

/// Disk of radius R: mode j has eigenvalue j/R.
FourierDTN dtn_disk(const Rational& radius, std::size_t max_mode);

/// Cone Z_k \ D(2*pi*k), computed through the quotient: the Z_k-invariant
/// harmonic degrees m on the radius-k disk give eigenvalue m/k, and the
/// boundary covering theta -> s = k*theta sends degree m to arclength mode m/k.
FourierDTN dtn_cone(std::size_t k, std::size_t max_mode);

}  // namespace steklov
