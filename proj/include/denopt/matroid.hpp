#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "denopt/subset.hpp"

namespace denopt {

enum class MatroidKind { Cardinality, Partition, ExplicitIndependent };

struct RankResult {
    int rank;
    Subset witness;  // a maximum independent subset of the query set
};

/// Matroid independence oracle. Cardinality and partition matroids satisfy the
/// axioms by construction; explicit families are validated exhaustively at
/// construction time (hereditary + exchange) and rejected when invalid.
class MatroidOracle {
public:
    static MatroidOracle cardinality(GroundSet ground, int r);
    static MatroidOracle partition(GroundSet ground,
                                   std::vector<std::vector<int>> blocks,
                                   std::vector<int> limits);
    /// The empty set is implicitly a member of the family.
    static MatroidOracle explicit_family(GroundSet ground,
                                         std::vector<std::vector<int>> independent);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.size(); }
    MatroidKind kind() const { return kind_; }

    bool is_independent(const Subset& s) const;
    bool is_independent_mask(std::uint64_t mask) const;

    /// Greedy over the elements of s in ascending id order; exact by the
    /// matroid exchange property.
    RankResult rank(const Subset& s) const;

    /// S is feasible iff its complement is independent.
    bool is_feasible_comatroid(const Subset& s) const;

    /// Minimum-cardinality T disjoint from a with complement(a | T)
    /// independent: T is what a maximum independent subset of the complement
    /// leaves uncovered. Empty when a is already feasible.
    Subset solve_extension(const Subset& a) const;

private:
    MatroidOracle(GroundSet ground, MatroidKind kind)
        : ground_(std::move(ground)), kind_(kind) {}
    void validate_explicit_axioms() const;

    GroundSet ground_;
    MatroidKind kind_;
    int card_limit_ = 0;
    std::vector<int> block_of_;  // element id -> partition block
    std::vector<int> limits_;
    std::unordered_set<std::uint64_t> family_;
};

}  // namespace denopt
