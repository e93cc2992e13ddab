#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steklov/ball_quotients.hpp"
#include "steklov/matrix_group.hpp"
#include "steklov/rational.hpp"

namespace steklov {

/// Finite group given by its multiplication table: table[a][b] = a*b.
class FiniteGroup {
public:
    /// Validates the table: entries in range, a two-sided identity, inverses,
    /// and associativity (exhaustive up to order 64, sampled above).
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return table_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::string& label(std::size_t a) const { return labels_[a]; }
    const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::string> labels_;
    std::size_t identity_ = 0;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup klein_four_group();       // 0 = 1, 1 = sigma, 2 = tau, 3 = sigma*tau
FiniteGroup symmetric_group_3();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Subgroups H_1..H_r of a fixed group, each stored as a sorted index list.
class SubgroupCollection {
public:
    /// Throws InvalidGroup unless every subset contains the identity and is
    /// closed under products and inverses.
    SubgroupCollection(const FiniteGroup& group, std::vector<std::vector<std::size_t>> subgroups);

    std::size_t size() const noexcept { return subgroups_.size(); }
    const std::vector<std::vector<std::size_t>>& subgroups() const noexcept { return subgroups_; }

private:
    std::vector<std::vector<std::size_t>> subgroups_;
};

/// Orbits of conjugation, each sorted; classes ordered by smallest element.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& group);

struct ClassTerm {
    std::size_t representative = 0;
    std::size_t class_size = 0;
    Rational lhs;  // sum_i |[x] n H_i| / |H_i|
    Rational rhs;  // sum_i |[x] n K_i| / |K_i|
};

struct SunadaReport {
    bool holds = false;
    std::vector<ClassTerm> classes;
};

SunadaReport sunada_condition(const FiniteGroup& group, const SubgroupCollection& h, const SubgroupCollection& k);

struct PermutationCharacterReport {
    bool equal = false;
    std::vector<std::uint64_t> chi_h;  // fixed right cosets of the H_i, per element
    std::vector<std::uint64_t> chi_k;
};

/// Permutation characters of G acting by right translation on the disjoint
/// unions of the coset spaces H_i\G and K_i\G, computed by materializing the
/// cosets.
PermutationCharacterReport permutation_character_equal(const FiniteGroup& group, const SubgroupCollection& h,
                                                       const SubgroupCollection& k);

/// An orthogonal representation of an abstract group: element_map[a] is the
/// index in `matrices` of the image of a.
struct MatrixRealization {
    OrthogonalGroup matrices;
    std::vector<std::size_t> element_map;
};

/// Checks that element_map is injective and multiplicative; throws
/// InvalidGroup otherwise.
MatrixRealization realize(const FiniteGroup& group, OrthogonalGroup matrices, std::vector<std::size_t> element_map);

/// Builds the realization from one matrix per abstract element (in index
/// order), closing the matrices into a group first.
MatrixRealization realize(const FiniteGroup& group, const std::vector<RationalMatrix>& images);
MatrixRealization realize(const FiniteGroup& group, const std::vector<RealMatrix>& images,
                          double tolerance = kDefaultTolerance);

struct BallCheckReport {
    bool isospectral = false;
    std::size_t max_degree = 0;
    SpectrumView union_h;
    SpectrumView union_k;
};

/// Steklov spectra, up to degree M, of the disjoint unions of H_i \ B(0,1) and
/// K_i \ B(0,1), and whether they agree as multisets.
BallCheckReport sunada_ball_check(const FiniteGroup& group, const MatrixRealization& realization,
                                  const SubgroupCollection& h, const SubgroupCollection& k, std::size_t max_degree);

}  // namespace steklov
