#include "steklov/matrix_group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

// Hash buckets are at least 1e-6 wide and always much wider than the tolerance.
double bucket_width(double tolerance) { return std::max(1e-6, 16 * tolerance); }

std::vector<long long> rounded_key(const RealMatrix& m, double tolerance) {
    const double w = bucket_width(tolerance);
    std::vector<long long> key;
    key.reserve(m.entries().size());
    for (double x : m.entries()) key.push_back(std::llround(x / w));
    return key;
}

// True if some entry sits within tolerance of a rounding boundary, so that a
// matching matrix could hash to a neighbouring bucket.
bool near_bucket_edge(const RealMatrix& m, double tolerance) {
    const double w = bucket_width(tolerance);
    for (double x : m.entries()) {
        double scaled = x / w;
        double frac = scaled - std::floor(scaled);
        if (std::abs(frac - 0.5) * w <= tolerance) return true;
    }
    return false;
}

void check_dims(const auto& generators) {
    if (generators.empty()) throw DomainError("at least one generator is required");
    const std::size_t n = generators.front().size();
    if (n == 0) throw DomainError("generators must be at least 1x1");
    for (const auto& g : generators) {
        if (g.size() != n) throw DomainError("generators have different dimensions");
    }
}

}  // namespace

RealMatrix to_real(const RationalMatrix& m) {
    std::vector<double> out;
    out.reserve(m.entries().size());
    for (const auto& x : m.entries()) out.push_back(x.get_d());
    return RealMatrix(m.size(), std::move(out));
}

double max_abs_difference(const RealMatrix& a, const RealMatrix& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

const std::vector<RationalMatrix>& OrthogonalGroup::exact_elements() const {
    if (mode_ != EntryMode::Exact) throw DomainError("float-mode group has no exact elements");
    return exact_;
}

void OrthogonalGroup::build_index() {
    float_index_.clear();
    exact_index_.clear();
    for (std::size_t i = 0; i < real_.size(); ++i) {
        if (mode_ == EntryMode::Exact) {
            exact_index_.emplace(exact_[i].entries(), i);
        } else {
            float_index_[rounded_key(real_[i], tolerance_)].push_back(i);
        }
    }
}

std::optional<std::size_t> OrthogonalGroup::find(const RationalMatrix& m) const {
    if (m.size() != dim_) return std::nullopt;
    if (mode_ == EntryMode::Exact) {
        auto it = exact_index_.find(m.entries());
        if (it == exact_index_.end()) return std::nullopt;
        return it->second;
    }
    return find(to_real(m));
}

std::optional<std::size_t> OrthogonalGroup::find(const RealMatrix& m) const {
    if (m.size() != dim_) return std::nullopt;
    const double tol = mode_ == EntryMode::Exact ? kDefaultTolerance : tolerance_;
    if (mode_ == EntryMode::Float) {
        if (auto it = float_index_.find(rounded_key(m, tol)); it != float_index_.end()) {
            for (std::size_t i : it->second) {
                if (max_abs_difference(real_[i], m) <= tol) return i;
            }
        }
        if (!near_bucket_edge(m, tol)) return std::nullopt;
    }
    for (std::size_t i = 0; i < real_.size(); ++i) {
        if (max_abs_difference(real_[i], m) <= tol) return i;
    }
    return std::nullopt;
}

OrthogonalGroup OrthogonalGroup::from_exact(std::size_t dim, std::vector<RationalMatrix> elements,
                                            std::vector<RealMatrix> generators) {
    OrthogonalGroup g;
    g.dim_ = dim;
    g.mode_ = EntryMode::Exact;
    g.exact_ = std::move(elements);
    for (const auto& e : g.exact_) g.real_.push_back(to_real(e));
    g.generators_ = std::move(generators);
    g.build_index();
    return g;
}

OrthogonalGroup OrthogonalGroup::from_real(std::size_t dim, std::vector<RealMatrix> elements,
                                           std::vector<RealMatrix> generators, double tolerance) {
    OrthogonalGroup g;
    g.dim_ = dim;
    g.mode_ = EntryMode::Float;
    g.tolerance_ = tolerance;
    g.real_ = std::move(elements);
    g.generators_ = std::move(generators);
    g.build_index();
    return g;
}

OrthogonalGroup close_group(const std::vector<RationalMatrix>& generators, std::size_t max_order) {
    check_dims(generators);
    if (max_order == 0) throw DomainError("max_order must be >= 1");
    const std::size_t n = generators.front().size();
    const auto identity = RationalMatrix::identity(n);
    for (const auto& g : generators) {
        if (g.transpose() * g != identity) throw NotOrthogonal("generator is not orthogonal (exact check)");
    }

    std::vector<RationalMatrix> elements{identity};
    std::map<std::vector<Rational>, std::size_t> seen{{identity.entries(), 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            RationalMatrix product = elements[head] * g;
            if (seen.contains(product.entries())) continue;
            if (elements.size() == max_order) {
                throw OrderExceeded("closure exceeds max_order = " + std::to_string(max_order));
            }
            seen.emplace(product.entries(), elements.size());
            elements.push_back(std::move(product));
        }
    }
    for (const auto& e : elements) {
        if (!seen.contains(e.transpose().entries())) throw InvalidGroup("closure is missing an inverse");
    }

    std::vector<RealMatrix> real_gens;
    for (const auto& g : generators) real_gens.push_back(to_real(g));
    return OrthogonalGroup::from_exact(n, std::move(elements), std::move(real_gens));
}

OrthogonalGroup close_group(const std::vector<RealMatrix>& generators, double tolerance, std::size_t max_order) {
    check_dims(generators);
    if (max_order == 0) throw DomainError("max_order must be >= 1");
    if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
    const std::size_t n = generators.front().size();
    const auto identity = RealMatrix::identity(n);
    for (const auto& g : generators) {
        if (max_abs_difference(g.transpose() * g, identity) > tolerance) {
            throw NotOrthogonal("generator is not orthogonal within tolerance " + std::to_string(tolerance));
        }
    }

    auto group = OrthogonalGroup::from_real(n, {identity}, generators, tolerance);
    for (std::size_t head = 0; head < group.real_.size(); ++head) {
        for (const auto& g : generators) {
            RealMatrix product = group.real_[head] * g;
            if (group.find(product)) continue;
            if (group.real_.size() == max_order) {
                throw OrderExceeded("closure exceeds max_order = " + std::to_string(max_order));
            }
            group.float_index_[rounded_key(product, tolerance)].push_back(group.real_.size());
            group.real_.push_back(std::move(product));
        }
    }
    for (const auto& e : group.real_) {
        if (!group.find(e.transpose())) throw InvalidGroup("closure is missing an inverse");
    }
    return group;
}

OrthogonalGroup OrthogonalGroup::subgroup(std::span<const std::size_t> indices) const {
    std::set<std::size_t> members(indices.begin(), indices.end());
    if (members.empty() || !members.contains(0)) throw InvalidGroup("subgroup must contain the identity");
    for (std::size_t i : members) {
        if (i >= order()) throw InvalidGroup("subgroup index out of range");
    }
    std::vector<std::size_t> ordered(members.begin(), members.end());
    for (std::size_t a : ordered) {
        for (std::size_t b : ordered) {
            auto product = mode_ == EntryMode::Exact ? find(exact_[a] * exact_[b]) : find(real_[a] * real_[b]);
            if (!product || !members.contains(*product)) throw InvalidGroup("subset is not closed under products");
        }
    }
    std::vector<RealMatrix> gens;
    for (std::size_t i : ordered) gens.push_back(real_[i]);
    if (mode_ == EntryMode::Exact) {
        std::vector<RationalMatrix> elems;
        for (std::size_t i : ordered) elems.push_back(exact_[i]);
        return from_exact(dim_, std::move(elems), std::move(gens));
    }
    std::vector<RealMatrix> elems = gens;
    return from_real(dim_, std::move(elems), std::move(gens), tolerance_);
}

OrthogonalGroup OrthogonalGroup::conjugated(const RationalMatrix& q) const {
    if (q.size() != dim_) throw DomainError("conjugating matrix has the wrong dimension");
    if (q.transpose() * q != RationalMatrix::identity(dim_)) throw NotOrthogonal("conjugating matrix");
    if (mode_ == EntryMode::Float) return conjugated(to_real(q));
    const RationalMatrix qt = q.transpose();
    std::vector<RationalMatrix> elems;
    for (const auto& e : exact_) elems.push_back(q * e * qt);
    std::vector<RealMatrix> gens;
    for (const auto& g : generators_) gens.push_back(to_real(q) * g * to_real(qt));
    return from_exact(dim_, std::move(elems), std::move(gens));
}

OrthogonalGroup OrthogonalGroup::conjugated(const RealMatrix& q) const {
    if (q.size() != dim_) throw DomainError("conjugating matrix has the wrong dimension");
    const double tol = mode_ == EntryMode::Float ? tolerance_ : kDefaultTolerance;
    if (max_abs_difference(q.transpose() * q, RealMatrix::identity(dim_)) > tol) {
        throw NotOrthogonal("conjugating matrix");
    }
    const RealMatrix qt = q.transpose();
    std::vector<RealMatrix> elems;
    for (const auto& e : real_) elems.push_back(q * e * qt);
    std::vector<RealMatrix> gens;
    for (const auto& g : generators_) gens.push_back(q * g * qt);
    return from_real(dim_, std::move(elems), std::move(gens), tol);
}

RationalMatrix diagonal_signs(std::span<const int> signs) {
    RationalMatrix m(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) m(i, i) = signs[i] < 0 ? -1 : 1;
    return m;
}

RealMatrix rotation_2d(std::size_t k) {
    if (k == 0) throw DomainError("rotation order must be >= 1");
    switch (k) {
        case 1: return RealMatrix::identity(2);
        case 2: return RealMatrix(2, {-1.0, 0.0, 0.0, -1.0});
        case 4: return RealMatrix(2, {0.0, -1.0, 1.0, 0.0});
        default: break;
    }
    const double angle = 2 * std::numbers::pi / static_cast<double>(k);
    const double c = std::cos(angle), s = std::sin(angle);
    return RealMatrix(2, {c, -s, s, c});
}

OrthogonalGroup cyclic_rotation_group(std::size_t k) {
    if (k == 0) throw DomainError("rotation order must be >= 1");
    if (k == 1 || k == 2 || k == 4) {
        const RealMatrix r = rotation_2d(k);
        std::vector<Rational> entries;
        for (double x : r.entries()) entries.emplace_back(static_cast<long>(x));
        return close_group({RationalMatrix(2, std::move(entries))}, k);
    }
    return close_group({rotation_2d(k)}, kDefaultTolerance, k);
}

OrthogonalGroup trivial_group(std::size_t dim) {
    return close_group({RationalMatrix::identity(dim)}, 1);
}

}  // namespace steklov
