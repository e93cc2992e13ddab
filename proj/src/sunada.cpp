#include "steklov/sunada.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr std::size_t kExhaustiveAssociativity = 64;

void require_same_size(const SubgroupCollection& h, const SubgroupCollection& k) {
    if (h.size() != k.size()) {
        throw CollectionSizeMismatch("collections have " + std::to_string(h.size()) + " and " +
                                     std::to_string(k.size()) + " subgroups");
    }
}

// Right cosets H a, each as a sorted index list, deduplicated.
std::vector<std::vector<std::size_t>> right_cosets(const FiniteGroup& group, const std::vector<std::size_t>& subgroup) {
    std::set<std::vector<std::size_t>> cosets;
    for (std::size_t a = 0; a < group.order(); ++a) {
        std::vector<std::size_t> coset;
        for (std::size_t h : subgroup) coset.push_back(group.multiply(h, a));
        std::sort(coset.begin(), coset.end());
        cosets.insert(std::move(coset));
    }
    return {cosets.begin(), cosets.end()};
}

std::vector<std::uint64_t> permutation_character(const FiniteGroup& group, const SubgroupCollection& collection) {
    std::vector<std::uint64_t> chi(group.order(), 0);
    for (const auto& subgroup : collection.subgroups()) {
        const auto cosets = right_cosets(group, subgroup);
        for (std::size_t g = 0; g < group.order(); ++g) {
            for (const auto& coset : cosets) {
                std::vector<std::size_t> moved;
                for (std::size_t x : coset) moved.push_back(group.multiply(x, g));
                std::sort(moved.begin(), moved.end());
                if (moved == coset) ++chi[g];
            }
        }
    }
    return chi;
}

SpectrumView union_spectrum(const MatrixRealization& realization, const SubgroupCollection& collection,
                            std::size_t max_degree) {
    SpectrumView out{SpectrumUnit::Absolute, {}};
    for (const auto& subgroup : collection.subgroups()) {
        std::vector<std::size_t> images;
        for (std::size_t a : subgroup) images.push_back(realization.element_map[a]);
        const auto quotient = realization.matrices.subgroup(images);
        auto view = quotient_ball_spectrum(quotient, Rational(1), max_degree);
        out.values.insert(out.values.end(), view.values.begin(), view.values.end());
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
    const std::size_t n = table_.size();
    if (n == 0) throw InvalidGroup("group must have at least one element");
    for (const auto& row : table_) {
        if (row.size() != n) throw InvalidGroup("multiplication table must be square");
        for (std::size_t x : row) {
            if (x >= n) throw InvalidGroup("multiplication table entry out of range");
        }
    }
    if (labels_.empty()) {
        for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != n) throw InvalidGroup("label count does not match group order");

    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool is_identity = true;
        for (std::size_t a = 0; a < n && is_identity; ++a) {
            is_identity = table_[e][a] == a && table_[a][e] == a;
        }
        if (is_identity) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw InvalidGroup("multiplication table has no identity");

    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] == n) throw InvalidGroup("element " + labels_[a] + " has no inverse");
    }

    auto associative = [&](std::size_t a, std::size_t b, std::size_t c) {
        return table_[table_[a][b]][c] == table_[a][table_[b][c]];
    };
    if (n <= kExhaustiveAssociativity) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (!associative(a, b, c)) throw InvalidGroup("multiplication table is not associative");
    } else {
        std::mt19937_64 rng(n);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int trial = 0; trial < 20000; ++trial) {
            if (!associative(pick(rng), pick(rng), pick(rng))) {
                throw InvalidGroup("multiplication table is not associative");
            }
        }
    }
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw DomainError("cyclic group order must be >= 1");
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return FiniteGroup(std::move(table));
}

FiniteGroup klein_four_group() {
    // Elements are bit patterns: sigma = 01, tau = 10, sigma*tau = 11.
    std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) table[a][b] = a ^ b;
    return FiniteGroup(std::move(table), {"1", "sigma", "tau", "sigma*tau"});
}

FiniteGroup symmetric_group_3() {
    std::vector<std::array<std::size_t, 3>> perms;
    std::array<std::size_t, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // (a*b)(i) = a(b(i)).
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < 6; ++a) {
        labels.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<std::size_t, 3> c{perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]};
            table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return FiniteGroup(std::move(table), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t n = a.order() * b.order();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
        labels[x] = "(" + a.label(x / b.order()) + "," + b.label(x % b.order()) + ")";
        for (std::size_t y = 0; y < n; ++y) {
            table[x][y] = a.multiply(x / b.order(), y / b.order()) * b.order() +
                          b.multiply(x % b.order(), y % b.order());
        }
    }
    return FiniteGroup(std::move(table), std::move(labels));
}

SubgroupCollection::SubgroupCollection(const FiniteGroup& group, std::vector<std::vector<std::size_t>> subgroups) {
    for (auto& subgroup : subgroups) {
        std::set<std::size_t> members(subgroup.begin(), subgroup.end());
        if (members.size() != subgroup.size()) throw InvalidGroup("subgroup lists an element twice");
        for (std::size_t x : members) {
            if (x >= group.order()) throw InvalidGroup("subgroup element out of range");
        }
        if (!members.contains(group.identity())) throw InvalidGroup("subgroup lacks the identity");
        for (std::size_t a : members) {
            if (!members.contains(group.inverse(a))) throw InvalidGroup("subgroup is not closed under inverses");
            for (std::size_t b : members) {
                if (!members.contains(group.multiply(a, b))) {
                    throw InvalidGroup("subgroup is not closed under products");
                }
            }
        }
        subgroups_.emplace_back(members.begin(), members.end());
    }
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& group) {
    const std::size_t n = group.order();
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t x = 0; x < n; ++x) {
        if (assigned[x]) continue;
        std::set<std::size_t> orbit;
        for (std::size_t g = 0; g < n; ++g) {
            orbit.insert(group.multiply(group.multiply(g, x), group.inverse(g)));
        }
        for (std::size_t y : orbit) assigned[y] = true;
        classes.emplace_back(orbit.begin(), orbit.end());
    }
    return classes;
}

SunadaReport sunada_condition(const FiniteGroup& group, const SubgroupCollection& h, const SubgroupCollection& k) {
    require_same_size(h, k);
    auto side = [](const std::vector<std::size_t>& cls, const SubgroupCollection& collection) {
        Rational total(0);
        for (const auto& subgroup : collection.subgroups()) {
            long hits = 0;
            for (std::size_t x : cls) {
                if (std::binary_search(subgroup.begin(), subgroup.end(), x)) ++hits;
            }
            total += Rational(hits, static_cast<long>(subgroup.size()));
        }
        total.canonicalize();
        return total;
    };

    SunadaReport report;
    report.holds = true;
    for (const auto& cls : conjugacy_classes(group)) {
        ClassTerm term{cls.front(), cls.size(), side(cls, h), side(cls, k)};
        if (term.lhs != term.rhs) report.holds = false;
        report.classes.push_back(std::move(term));
    }
    return report;
}

PermutationCharacterReport permutation_character_equal(const FiniteGroup& group, const SubgroupCollection& h,
                                                       const SubgroupCollection& k) {
    require_same_size(h, k);
    PermutationCharacterReport report;
    report.chi_h = permutation_character(group, h);
    report.chi_k = permutation_character(group, k);
    report.equal = report.chi_h == report.chi_k;
    return report;
}

MatrixRealization realize(const FiniteGroup& group, OrthogonalGroup matrices, std::vector<std::size_t> element_map) {
    if (element_map.size() != group.order()) throw InvalidGroup("element map must cover every group element");
    std::set<std::size_t> images(element_map.begin(), element_map.end());
    if (images.size() != element_map.size()) throw InvalidGroup("element map is not injective");
    for (std::size_t i : images) {
        if (i >= matrices.order()) throw InvalidGroup("element map points outside the matrix group");
    }
    for (std::size_t a = 0; a < group.order(); ++a) {
        for (std::size_t b = 0; b < group.order(); ++b) {
            const std::size_t ia = element_map[a], ib = element_map[b];
            auto product = matrices.mode() == EntryMode::Exact
                               ? matrices.find(matrices.exact_elements()[ia] * matrices.exact_elements()[ib])
                               : matrices.find(matrices.elements()[ia] * matrices.elements()[ib]);
            if (!product || *product != element_map[group.multiply(a, b)]) {
                throw InvalidGroup("element map is not a homomorphism at (" + group.label(a) + ", " + group.label(b) +
                                   ")");
            }
        }
    }
    return MatrixRealization{std::move(matrices), std::move(element_map)};
}

MatrixRealization realize(const FiniteGroup& group, const std::vector<RationalMatrix>& images) {
    if (images.size() != group.order()) throw InvalidGroup("need one matrix per group element");
    auto matrices = close_group(images, std::max<std::size_t>(group.order(), 1) * 64);
    std::vector<std::size_t> map;
    for (const auto& m : images) map.push_back(*matrices.find(m));
    return realize(group, std::move(matrices), std::move(map));
}

MatrixRealization realize(const FiniteGroup& group, const std::vector<RealMatrix>& images, double tolerance) {
    if (images.size() != group.order()) throw InvalidGroup("need one matrix per group element");
    auto matrices = close_group(images, tolerance, std::max<std::size_t>(group.order(), 1) * 64);
    std::vector<std::size_t> map;
    for (const auto& m : images) {
        auto idx = matrices.find(m);
        if (!idx) throw InvalidGroup("image matrix not found in its own closure");
        map.push_back(*idx);
    }
    return realize(group, std::move(matrices), std::move(map));
}

BallCheckReport sunada_ball_check(const FiniteGroup& group, const MatrixRealization& realization,
                                  const SubgroupCollection& h, const SubgroupCollection& k, std::size_t max_degree) {
    require_same_size(h, k);
    if (realization.element_map.size() != group.order()) throw InvalidGroup("realization does not match the group");
    BallCheckReport report;
    report.max_degree = max_degree;
    report.union_h = union_spectrum(realization, h, max_degree);
    report.union_k = union_spectrum(realization, k, max_degree);
    report.isospectral = report.union_h == report.union_k;
    return report;
}

}  // namespace steklov
