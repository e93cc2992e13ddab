#include "steklov/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

// Distinct values with their counts, ascending.
std::vector<std::pair<Rational, std::size_t>> tally(const std::vector<Rational>& sorted) {
    std::vector<std::pair<Rational, std::size_t>> out;
    for (const auto& v : sorted) {
        if (!out.empty() && out.back().first == v) {
            ++out.back().second;
        } else {
            out.emplace_back(v, 1);
        }
    }
    return out;
}

std::size_t available_pairs(const std::vector<std::pair<Rational, std::size_t>>& counts) {
    std::size_t pairs = 0;
    for (const auto& [v, c] : counts) pairs += c / 2;
    return pairs;
}

}  // namespace

BoundaryDataClass::BoundaryDataClass(std::size_t r, std::size_t s, std::vector<Rational> merged_lengths)
    : r_(r), s_(s), merged_(std::move(merged_lengths)) {
    for (auto& v : merged_) v = Length(v).value();
    std::sort(merged_.begin(), merged_.end());
    if (merged_.size() != 2 * r_ + s_) {
        throw EmptyClass("merged multiset has " + std::to_string(merged_.size()) + " entries, expected 2r+s = " +
                         std::to_string(2 * r_ + s_));
    }
    if (available_pairs(tally(merged_)) < r_) {
        throw EmptyClass("merged multiset does not contain " + std::to_string(r_) + " equal pairs");
    }
}

ProgressionDecomposition peel_progressions(const SpectrumView& view) {
    validate_view(view);
    if (view.values.empty()) return ProgressionDecomposition(view.unit, 0, {});

    std::uint64_t zeros = 0;
    std::map<Rational, std::uint64_t> remaining;
    for (const auto& v : view.values) {
        if (sgn(v) == 0) {
            ++zeros;
        } else {
            ++remaining[v];
        }
    }
    const Rational& top = view.values.back();

    std::vector<Progression> found;
    while (!remaining.empty()) {
        auto first = remaining.begin();
        Rational d = first->first;
        std::uint64_t mu = first->second;
        found.push_back({d, mu});
        for (std::uint64_t k = 1;; ++k) {
            Rational value = d * k;
            if (value > top) break;
            auto it = remaining.find(value);
            std::uint64_t have = it == remaining.end() ? 0 : it->second;
            if (have < mu && value != top) {
                throw PeelInconsistency("progression of difference " + to_string(d) + " (multiplicity " +
                                        std::to_string(mu) + ") needs " + std::to_string(mu) + " copies of " +
                                        to_string(value) + ", found " + std::to_string(have));
            }
            std::uint64_t take = std::min(have, mu);
            if (take == 0) continue;
            if (have == take) {
                remaining.erase(it);
            } else {
                it->second -= take;
            }
        }
    }

    ProgressionDecomposition result(view.unit, zeros, std::move(found));
    if (enumerate(result, view.values.size()) != view) {
        throw PeelInconsistency("re-enumeration of the decomposition does not reproduce the input prefix");
    }
    return result;
}

ApproxDecomposition peel_progressions_approx(std::span<const double> values, double epsilon) {
    if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]) || values[i] < -epsilon) throw DomainError("values must be finite and >= 0");
        if (i > 0 && values[i] < values[i - 1] - epsilon) throw DomainError("values must be non-decreasing");
    }

    ApproxDecomposition out;
    // Clusters of values within epsilon of each other: (center, count).
    std::vector<std::pair<double, std::uint64_t>> clusters;
    for (double v : values) {
        if (std::abs(v) <= epsilon) {
            ++out.zeros;
            continue;
        }
        if (!clusters.empty() && v - clusters.back().first <= epsilon) {
            auto& [center, count] = clusters.back();
            center = (center * static_cast<double>(count) + v) / static_cast<double>(count + 1);
            ++count;
        } else {
            clusters.emplace_back(v, 1);
        }
    }
    if (clusters.empty()) return out;
    const double top = clusters.back().first;

    for (std::size_t start = 0; start < clusters.size();) {
        if (clusters[start].second == 0) {
            ++start;
            continue;
        }
        double d = clusters[start].first;
        const std::uint64_t mu = clusters[start].second;
        double matched_sum = 0;
        double matched_weight = 0;
        std::size_t cursor = start;
        for (std::uint64_t k = 1;; ++k) {
            double target = d * static_cast<double>(k);
            if (target > top + epsilon) break;
            while (cursor < clusters.size() && clusters[cursor].first < target - epsilon) ++cursor;
            bool hit = cursor < clusters.size() && std::abs(clusters[cursor].first - target) <= epsilon;
            std::uint64_t have = hit ? clusters[cursor].second : 0;
            bool at_top = std::abs(target - top) <= epsilon;
            if (have < mu && !at_top) {
                throw PeelInconsistency("heuristic peel: progression near " + std::to_string(d) +
                                        " is missing copies near " + std::to_string(target));
            }
            if (have == 0) continue;
            clusters[cursor].second -= std::min(have, mu);
            matched_sum += clusters[cursor].first;
            matched_weight += static_cast<double>(k);
            d = matched_sum / matched_weight;
        }
        out.progressions.emplace_back(d, mu);
    }
    return out;
}

BoundaryDataClass recover_boundary_class(const ProgressionDecomposition& decomposition) {
    if (decomposition.unit() != SpectrumUnit::PiScaled) {
        throw DomainError("boundary data can only be recovered from a PiScaled spectrum");
    }
    const auto z = static_cast<long long>(decomposition.zeros());
    const auto t = static_cast<long long>(decomposition.total_multiplicity());
    const long long r = t - z;
    const long long s = 2 * z - t;
    if (r < 0 || s < 0) {
        throw InfeasibleCounts("zeros = " + std::to_string(z) + ", total multiplicity = " + std::to_string(t) +
                               " gives r = " + std::to_string(r) + ", s = " + std::to_string(s));
    }
    std::vector<Rational> merged;
    for (const auto& p : decomposition.progressions()) {
        Rational length = Rational(2) / p.difference;
        for (std::uint64_t i = 0; i < p.multiplicity; ++i) merged.push_back(length);
    }
    return BoundaryDataClass(static_cast<std::size_t>(r), static_cast<std::size_t>(s), std::move(merged));
}

BoundaryDataClass boundary_class_of(const BoundaryData& data) {
    std::vector<Rational> merged;
    for (const auto& l : data.type_one()) {
        merged.push_back(l);
        merged.push_back(l);
    }
    for (const auto& l : data.type_two()) merged.push_back(2 * l);
    return BoundaryDataClass(data.r(), data.s(), std::move(merged));
}

bool data_equivalent(const BoundaryData& a, const BoundaryData& b) {
    return a.unit() == b.unit() && boundary_class_of(a) == boundary_class_of(b);
}

std::vector<BoundaryData> enumerate_class_members(const BoundaryDataClass& cls) {
    const auto counts = tally(cls.merged_lengths());
    std::vector<BoundaryData> members;
    std::vector<std::size_t> pairs(counts.size(), 0);

    // Choose how many equal pairs each distinct value contributes to L.
    auto search = [&](auto&& self, std::size_t index, std::size_t still_needed) -> void {
        if (index == counts.size()) {
            if (still_needed != 0) return;
            std::vector<Rational> one, two;
            for (std::size_t i = 0; i < counts.size(); ++i) {
                const auto& [value, count] = counts[i];
                for (std::size_t k = 0; k < pairs[i]; ++k) one.push_back(value);
                for (std::size_t k = 0; k < count - 2 * pairs[i]; ++k) two.push_back(value / 2);
            }
            members.emplace_back(std::move(one), std::move(two));
            return;
        }
        const std::size_t most = std::min(counts[index].second / 2, still_needed);
        for (std::size_t p = 0; p <= most; ++p) {
            pairs[index] = p;
            self(self, index + 1, still_needed - p);
        }
        pairs[index] = 0;
    };
    search(search, 0, cls.r());

    if (members.empty()) throw EmptyClass("no boundary data realize this class");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

std::size_t sufficient_prefix_length(const BoundaryData& data) {
    const auto cls = boundary_class_of(data);
    const auto& merged = cls.merged_lengths();
    if (merged.empty()) return std::max<std::size_t>(1, cls.r() + cls.s());
    Rational ratio = merged.back() / merged.front();
    Integer ceiling;
    mpz_cdiv_q(ceiling.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    return 4 * merged.size() * ceiling.get_ui();
}

}  // namespace steklov
