#include "denopt/subset.hpp"

#include <algorithm>
#include <unordered_set>

namespace denopt {

GroundSet::GroundSet(int n) : n_(n) {
    if (n < 1) throw InvalidInstanceError("GroundSet: need at least one element");
}

GroundSet::GroundSet(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
    if (n < 1) throw InvalidInstanceError("GroundSet: need at least one element");
    if (static_cast<int>(labels_.size()) != n)
        throw InvalidInstanceError("GroundSet: label count must equal element count");
    std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n)
        throw InvalidInstanceError("GroundSet: labels must be unique");
}

const std::string& GroundSet::label(int v) const {
    if (!has_labels() || v < 0 || v >= n_)
        throw std::out_of_range("GroundSet::label");
    return labels_[v];
}

Subset::Subset(int ground_size) : n_(ground_size) {
    if (ground_size < 1) throw InvalidInstanceError("Subset: ground size must be positive");
    blocks_.assign((ground_size + 63) / 64, 0);
}

Subset Subset::all(int ground_size) {
    Subset s(ground_size);
    for (std::size_t b = 0; b < s.blocks_.size(); ++b) s.blocks_[b] = ~std::uint64_t{0};
    int tail = ground_size % 64;
    if (tail != 0) s.blocks_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

Subset Subset::of(int ground_size, std::initializer_list<int> ids) {
    Subset s(ground_size);
    for (int v : ids) s.add(v);
    return s;
}

Subset Subset::from_ids(int ground_size, const std::vector<int>& ids) {
    Subset s(ground_size);
    for (int v : ids) s.add(v);
    return s;
}

Subset Subset::from_mask(int ground_size, std::uint64_t mask) {
    Subset s(ground_size);
    if (ground_size < 64 && (mask >> ground_size) != 0)
        throw std::out_of_range("Subset::from_mask: mask has bits beyond the ground set");
    s.blocks_[0] = mask;
    return s;
}

int Subset::cardinality() const {
    int c = 0;
    for (std::uint64_t w : blocks_) c += std::popcount(w);
    return c;
}

bool Subset::contains(int v) const {
    check_id(v);
    return (blocks_[v / 64] >> (v % 64)) & 1;
}

void Subset::add(int v) {
    check_id(v);
    blocks_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void Subset::remove(int v) {
    check_id(v);
    blocks_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

bool Subset::is_subset_of(const Subset& other) const {
    check_same_ground(*this, other);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        if ((blocks_[b] & ~other.blocks_[b]) != 0) return false;
    return true;
}

bool Subset::intersects(const Subset& other) const {
    check_same_ground(*this, other);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        if ((blocks_[b] & other.blocks_[b]) != 0) return true;
    return false;
}

Subset Subset::complement() const {
    return Subset::all(n_) - *this;
}

std::uint64_t Subset::to_mask() const {
    if (n_ > 64) throw CapExceededError("Subset::to_mask: ground set larger than 64 elements");
    return blocks_[0];
}

std::vector<int> Subset::members() const {
    std::vector<int> out;
    out.reserve(cardinality());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

Subset operator|(const Subset& a, const Subset& b) {
    Subset::check_same_ground(a, b);
    Subset r = a;
    for (std::size_t i = 0; i < r.blocks_.size(); ++i) r.blocks_[i] |= b.blocks_[i];
    return r;
}

Subset operator&(const Subset& a, const Subset& b) {
    Subset::check_same_ground(a, b);
    Subset r = a;
    for (std::size_t i = 0; i < r.blocks_.size(); ++i) r.blocks_[i] &= b.blocks_[i];
    return r;
}

Subset operator-(const Subset& a, const Subset& b) {
    Subset::check_same_ground(a, b);
    Subset r = a;
    for (std::size_t i = 0; i < r.blocks_.size(); ++i) r.blocks_[i] &= ~b.blocks_[i];
    return r;
}

bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
}

bool Subset::lex_less(const Subset& a, const Subset& b) {
    std::vector<int> ma = a.members(), mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string Subset::str() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int v) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(v);
    });
    return out + "}";
}

void Subset::check_id(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Subset: element id out of range");
}

void Subset::check_same_ground(const Subset& a, const Subset& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("Subset: operands have different ground sets");
}

}  // namespace denopt
