#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "denopt/errors.hpp"

namespace denopt {

/// The universe: elements are the ids 0..n-1, optionally carrying external labels.
class GroundSet {
public:
    explicit GroundSet(int n);
    GroundSet(int n, std::vector<std::string> labels);

    int size() const { return n_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;

private:
    int n_;
    std::vector<std::string> labels_;
};

/// A subset of a ground set, stored as 64-bit blocks. Value semantics; the
/// binary set operators require both operands to share a ground size.
class Subset {
public:
    explicit Subset(int ground_size);
    static Subset all(int ground_size);
    static Subset of(int ground_size, std::initializer_list<int> ids);
    static Subset from_ids(int ground_size, const std::vector<int>& ids);
    static Subset from_mask(int ground_size, std::uint64_t mask);

    int ground_size() const { return n_; }
    int cardinality() const;
    bool empty() const { return cardinality() == 0; }

    bool contains(int v) const;
    void add(int v);
    void remove(int v);

    bool is_subset_of(const Subset& other) const;
    bool intersects(const Subset& other) const;
    Subset complement() const;

    /// Bitmask over the full ground set; only valid for ground sizes up to 64.
    std::uint64_t to_mask() const;
    std::vector<int> members() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
            std::uint64_t w = blocks_[b];
            while (w != 0) {
                int bit = std::countr_zero(w);
                fn(b * 64 + bit);
                w &= w - 1;
            }
        }
    }

    friend Subset operator|(const Subset& a, const Subset& b);
    friend Subset operator&(const Subset& a, const Subset& b);
    friend Subset operator-(const Subset& a, const Subset& b);
    friend bool operator==(const Subset& a, const Subset& b);
    friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

    /// Lexicographic order on the sorted id sequences, e.g. {0,3} < {1,2}.
    static bool lex_less(const Subset& a, const Subset& b);

    std::string str() const;  // "{0, 2, 5}"

private:
    void check_id(int v) const;
    static void check_same_ground(const Subset& a, const Subset& b);

    int n_;
    std::vector<std::uint64_t> blocks_;
};

}  // namespace denopt
