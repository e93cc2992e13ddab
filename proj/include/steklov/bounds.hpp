#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "steklov/matrix_group.hpp"
#include "steklov/rational.hpp"

namespace steklov {

/// Parameters of the cyclic group Gamma_{q,p} of O(2m) rotating the complex
/// coordinate z_i by exp(2*pi*i*p_i/q), and of its congruence lattice
/// L(q; p) = { a in Z^m : a.p = 0 mod q }.
class LensParams {
public:
    LensParams(std::int64_t q, std::vector<std::int64_t> p);

    std::int64_t q() const noexcept { return q_; }
    /// Reduced into [0, q).
    const std::vector<std::int64_t>& p() const noexcept { return p_; }
    std::size_t m() const noexcept { return p_.size(); }
    std::size_t n() const noexcept { return 2 * p_.size(); }
    /// q = 1 or every p_i = 0 mod q: the group is trivial and L = Z^m.
    bool trivial() const;

private:
    std::int64_t q_;
    std::vector<std::int64_t> p_;
};

struct LatticeMinimum {
    std::int64_t sigma2 = 0;
    std::vector<std::int64_t> witness;
};

/// Minimum L1 norm of a nonzero vector of L(q; p), which is sigma_2 of the
/// ball quotient Gamma_{q,p} \ B(0,1). Found by scanning the L1 spheres of
/// radius 1, 2, ... in a fixed order; the first hit is the witness.
LatticeMinimum sigma2_lens(const LensParams& params);

/// True iff sigma2_lens(j^m, (1, j, ..., j^{m-1})) == j. Throws DomainError
/// when j^m overflows 63 bits.
bool verify_sharpness_family(std::int64_t j, std::int64_t m);

/// (1, j, ..., j^{m-1}) with q = j^m.
LensParams sharpness_params(std::int64_t j, std::int64_t m);

/// Gamma_{q,p} as a float-mode subgroup of O(2m).
OrthogonalGroup lens_group(const LensParams& params);

/// Isoperimetric ratio of an order-q quotient: q^{-1/n} * I(Omega). `exact` is
/// set when q is a perfect n-th power.
struct IsoperimetricQuotient {
    Rational i_omega;
    std::int64_t q = 1;
    std::int64_t n = 2;
    double value = 0;
    std::optional<Rational> exact;
};

IsoperimetricQuotient isoperimetric_quotient(const Rational& i_omega, std::int64_t q, std::int64_t n);

struct Cell {
    int dimension = 0;              // 0, 1 or 2
    std::uint64_t isotropy_order = 1;
};

/// Cell division with constant isotropy on each open cell. Whether the cells
/// really assemble into an orbifold is not checked.
struct CellComplex {
    std::vector<Cell> cells;
};

/// sum_i (-1)^dim(c_i) / |Iso(c_i)|.
Rational euler_characteristic(const CellComplex& complex);

CellComplex disjoint_union(const CellComplex& a, const CellComplex& b);
/// Closed disk: one vertex, one edge, one face.
CellComplex disk_complex();
/// Cone of order k: cone point with isotropy k, a boundary vertex, a radial
/// edge, the boundary edge and the face.
CellComplex cone_complex(std::uint64_t k);

enum class Regime { NonnegativeExcess, NegativeExcess };

/// State of the conformal invariant attached to a bound report.
enum class ConformalFlag { Zero, PositiveUnknown, Unspecified };

struct BoundRegimeInput {
    Rational chi;
    std::uint64_t r = 0;
    std::uint64_t s = 0;
};

struct BoundReport {
    Regime regime = Regime::NonnegativeExcess;
    Rational excess;  // chi + r + s/2
    Rational rhs;
    ConformalFlag conformal = ConformalFlag::Unspecified;
};

/// e = chi + r + s/2; rhs = B*k when e >= 0, else -A*e + B*k. A and B are
/// caller-supplied positive constants.
BoundReport bound_regime(const BoundRegimeInput& input, std::uint64_t k, const Rational& a, const Rational& b,
                         ConformalFlag conformal = ConformalFlag::Unspecified);

const char* regime_name(Regime regime);
const char* conformal_name(ConformalFlag flag);

}  // namespace steklov
