#include "denopt/matroid.hpp"

#include <bit>
#include <string>

#include "denopt/errors.hpp"

namespace denopt {

namespace {
constexpr int kExplicitCap = 12;
}

MatroidOracle MatroidOracle::cardinality(GroundSet ground, int r) {
    if (r < 0) throw InvalidInstanceError("cardinality matroid: rank bound must be nonnegative");
    MatroidOracle m(std::move(ground), MatroidKind::Cardinality);
    m.card_limit_ = r;
    return m;
}

MatroidOracle MatroidOracle::partition(GroundSet ground, std::vector<std::vector<int>> blocks,
                                       std::vector<int> limits) {
    MatroidOracle m(std::move(ground), MatroidKind::Partition);
    const int n = m.n();
    if (blocks.size() != limits.size())
        throw InvalidInstanceError("partition matroid: one limit per block required");
    m.block_of_.assign(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int v : blocks[b]) {
            if (v < 0 || v >= n)
                throw InvalidInstanceError("partition matroid: element id out of range");
            if (m.block_of_[v] != -1)
                throw InvalidInstanceError("partition matroid: element " + std::to_string(v) +
                                           " appears in two blocks");
            m.block_of_[v] = static_cast<int>(b);
        }
        if (limits[b] < 0)
            throw InvalidInstanceError("partition matroid: limits must be nonnegative");
    }
    for (int v = 0; v < n; ++v)
        if (m.block_of_[v] == -1)
            throw InvalidInstanceError("partition matroid: element " + std::to_string(v) +
                                       " is in no block");
    m.limits_ = std::move(limits);
    return m;
}

MatroidOracle MatroidOracle::explicit_family(GroundSet ground,
                                             std::vector<std::vector<int>> independent) {
    if (ground.size() > kExplicitCap)
        throw CapExceededError("explicit matroid: validation capped at " +
                               std::to_string(kExplicitCap) + " elements");
    MatroidOracle m(std::move(ground), MatroidKind::ExplicitIndependent);
    m.family_.insert(0);
    for (const auto& ids : independent)
        m.family_.insert(Subset::from_ids(m.n(), ids).to_mask());
    m.validate_explicit_axioms();
    return m;
}

void MatroidOracle::validate_explicit_axioms() const {
    for (std::uint64_t s : family_) {
        // Hereditary: dropping any one element stays in the family.
        for (std::uint64_t w = s; w != 0; w &= w - 1) {
            std::uint64_t without = s & ~(w & -w);
            if (!family_.count(without))
                throw InvalidInstanceError("explicit matroid: family is not hereditary");
        }
        // Exchange against every larger member.
        for (std::uint64_t t : family_) {
            if (std::popcount(s) >= std::popcount(t)) continue;
            bool extended = false;
            for (std::uint64_t w = t & ~s; w != 0; w &= w - 1) {
                if (family_.count(s | (w & -w))) {
                    extended = true;
                    break;
                }
            }
            if (!extended)
                throw InvalidInstanceError("explicit matroid: exchange property fails");
        }
    }
}

bool MatroidOracle::is_independent(const Subset& s) const {
    if (s.ground_size() != n())
        throw std::invalid_argument("MatroidOracle: subset over a different ground set");
    switch (kind_) {
        case MatroidKind::Cardinality:
            return s.cardinality() <= card_limit_;
        case MatroidKind::Partition: {
            std::vector<int> used(limits_.size(), 0);
            bool ok = true;
            s.for_each([&](int v) {
                if (++used[block_of_[v]] > limits_[block_of_[v]]) ok = false;
            });
            return ok;
        }
        case MatroidKind::ExplicitIndependent:
            return family_.count(s.to_mask()) > 0;
    }
    return false;
}

bool MatroidOracle::is_independent_mask(std::uint64_t mask) const {
    switch (kind_) {
        case MatroidKind::Cardinality:
            return std::popcount(mask) <= card_limit_;
        case MatroidKind::Partition: {
            std::vector<int> used(limits_.size(), 0);
            for (std::uint64_t w = mask; w != 0; w &= w - 1) {
                int v = std::countr_zero(w);
                if (++used[block_of_[v]] > limits_[block_of_[v]]) return false;
            }
            return true;
        }
        case MatroidKind::ExplicitIndependent:
            return family_.count(mask) > 0;
    }
    return false;
}

RankResult MatroidOracle::rank(const Subset& s) const {
    Subset witness(n());
    s.for_each([&](int v) {
        witness.add(v);
        if (!is_independent(witness)) witness.remove(v);
    });
    return {witness.cardinality(), witness};
}

bool MatroidOracle::is_feasible_comatroid(const Subset& s) const {
    return is_independent(s.complement());
}

Subset MatroidOracle::solve_extension(const Subset& a) const {
    Subset rest = a.complement();
    return rest - rank(rest).witness;
}

}  // namespace denopt
