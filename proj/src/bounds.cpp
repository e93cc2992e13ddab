#include "steklov/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

std::int64_t checked_power(std::int64_t base, std::int64_t exponent) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exponent; ++i) {
        if (base != 0 && out > std::numeric_limits<std::int64_t>::max() / base) {
            throw DomainError(std::to_string(base) + "^" + std::to_string(exponent) + " overflows 63 bits");
        }
        out *= base;
    }
    return out;
}

// Depth-first walk over every a with sum |a_i| = remaining at positions >= i.
// Coordinates are tried in the order 0, 1, -1, 2, -2, ...
class ShellSearch {
public:
    ShellSearch(const LensParams& params) : params_(params), current_(params.m(), 0) {}

    bool search(std::int64_t radius) { return visit(0, radius, 0); }
    const std::vector<std::int64_t>& witness() const { return current_; }

private:
    bool visit(std::size_t i, std::int64_t remaining, std::int64_t residue) {
        const std::int64_t q = params_.q();
        if (i + 1 == current_.size()) {
            for (std::int64_t sign : {1, -1}) {
                if (remaining == 0 && sign < 0) break;
                const std::int64_t a = sign * remaining;
                const std::int64_t r = (residue + (a % q + q) % q * params_.p()[i]) % q;
                if (r == 0) {
                    current_[i] = a;
                    return true;
                }
            }
            return false;
        }
        for (std::int64_t mag = 0; mag <= remaining; ++mag) {
            for (std::int64_t sign : {1, -1}) {
                if (mag == 0 && sign < 0) break;
                const std::int64_t a = sign * mag;
                current_[i] = a;
                const std::int64_t r = (residue + (a % q + q) % q * params_.p()[i]) % q;
                if (visit(i + 1, remaining - mag, r)) return true;
            }
        }
        current_[i] = 0;
        return false;
    }

    const LensParams& params_;
    std::vector<std::int64_t> current_;
};

}  // namespace

LensParams::LensParams(std::int64_t q, std::vector<std::int64_t> p) : q_(q), p_(std::move(p)) {
    if (q_ < 1) throw DomainError("q must be >= 1");
    if (p_.empty()) throw DomainError("p must have at least one entry");
    if (q_ > 2'000'000'000) throw DomainError("q too large for 64-bit residue arithmetic");
    for (auto& x : p_) x = ((x % q_) + q_) % q_;
}

bool LensParams::trivial() const {
    for (auto x : p_) {
        if (x != 0) return false;
    }
    return true;
}

LatticeMinimum sigma2_lens(const LensParams& params) {
    ShellSearch search(params);
    // a = (q, 0, ..., 0) always lies in the lattice, so radius q is a hit.
    for (std::int64_t radius = 1; radius <= params.q(); ++radius) {
        if (search.search(radius)) return {radius, search.witness()};
    }
    throw std::logic_error("shell search passed radius q without a lattice vector");
}

LensParams sharpness_params(std::int64_t j, std::int64_t m) {
    if (j < 1 || m < 1) throw DomainError("sharpness family needs j >= 1 and m >= 1");
    std::vector<std::int64_t> p;
    for (std::int64_t i = 0; i < m; ++i) p.push_back(checked_power(j, i));
    return LensParams(checked_power(j, m), std::move(p));
}

bool verify_sharpness_family(std::int64_t j, std::int64_t m) {
    return sigma2_lens(sharpness_params(j, m)).sigma2 == j;
}

OrthogonalGroup lens_group(const LensParams& params) {
    const std::size_t n = params.n();
    RealMatrix generator(n);
    for (std::size_t i = 0; i < params.m(); ++i) {
        const double angle = 2 * std::numbers::pi * static_cast<double>(params.p()[i]) / static_cast<double>(params.q());
        const double c = std::cos(angle), s = std::sin(angle);
        generator(2 * i, 2 * i) = c;
        generator(2 * i, 2 * i + 1) = -s;
        generator(2 * i + 1, 2 * i) = s;
        generator(2 * i + 1, 2 * i + 1) = c;
    }
    return close_group({generator}, kDefaultTolerance, static_cast<std::size_t>(params.q()));
}

IsoperimetricQuotient isoperimetric_quotient(const Rational& i_omega, std::int64_t q, std::int64_t n) {
    if (sgn(i_omega) <= 0) throw DomainError("isoperimetric ratio must be positive");
    if (q < 1) throw DomainError("group order must be >= 1");
    if (n < 2) throw DomainError("dimension must be >= 2");
    IsoperimetricQuotient out{i_omega, q, n, 0.0, std::nullopt};
    out.value = i_omega.get_d() * std::pow(static_cast<double>(q), -1.0 / static_cast<double>(n));
    Integer root;
    const Integer big_q(static_cast<long>(q));
    if (mpz_root(root.get_mpz_t(), big_q.get_mpz_t(), static_cast<unsigned long>(n)) != 0) {
        out.exact = Rational(i_omega / Rational(root));
        out.exact->canonicalize();
    }
    return out;
}

Rational euler_characteristic(const CellComplex& complex) {
    Rational chi(0);
    for (const auto& cell : complex.cells) {
        if (cell.dimension < 0 || cell.dimension > 2) throw DomainError("cell dimension must be 0, 1 or 2");
        if (cell.isotropy_order == 0) throw DomainError("isotropy order must be >= 1");
        Rational term(1, static_cast<unsigned long>(cell.isotropy_order));
        if (cell.dimension % 2 == 1) {
            chi -= term;
        } else {
            chi += term;
        }
    }
    chi.canonicalize();
    return chi;
}

CellComplex disjoint_union(const CellComplex& a, const CellComplex& b) {
    CellComplex out = a;
    out.cells.insert(out.cells.end(), b.cells.begin(), b.cells.end());
    return out;
}

CellComplex disk_complex() { return CellComplex{{{0, 1}, {1, 1}, {2, 1}}}; }

CellComplex cone_complex(std::uint64_t k) {
    if (k == 0) throw DomainError("cone order must be >= 1");
    return CellComplex{{{0, k}, {0, 1}, {1, 1}, {1, 1}, {2, 1}}};
}

BoundReport bound_regime(const BoundRegimeInput& input, std::uint64_t k, const Rational& a, const Rational& b,
                         ConformalFlag conformal) {
    if (sgn(a) <= 0 || sgn(b) <= 0) throw DomainError("constants A and B must be positive");
    if (k == 0) throw DomainError("eigenvalue index k must be >= 1");
    BoundReport report;
    report.conformal = conformal;
    report.excess = input.chi + Rational(static_cast<unsigned long>(input.r)) +
                    Rational(static_cast<unsigned long>(input.s), 2);
    report.excess.canonicalize();
    const Rational bk = b * Rational(static_cast<unsigned long>(k));
    if (sgn(report.excess) >= 0) {
        report.regime = Regime::NonnegativeExcess;
        report.rhs = bk;
    } else {
        report.regime = Regime::NegativeExcess;
        report.rhs = -a * report.excess + bk;
    }
    report.rhs.canonicalize();
    return report;
}

const char* regime_name(Regime regime) {
    return regime == Regime::NonnegativeExcess ? "NonnegativeExcess" : "NegativeExcess";
}

const char* conformal_name(ConformalFlag flag) {
    switch (flag) {
        case ConformalFlag::Zero: return "Zero";
        case ConformalFlag::PositiveUnknown: return "PositiveUnknown";
        case ConformalFlag::Unspecified: return "Unspecified";
    }
    return "Unspecified";
}

}  // namespace steklov
