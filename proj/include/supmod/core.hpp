#pragma once

// Shared value types: ground sets, subset bitmasks, exact rationals,
// binary relations, set systems, and the seeded PRNG.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace supmod {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed external input (files, labels); CLI maps this to exit code 2
struct input_error : error {
    using error::error;
};

// size guard exceeded; CLI maps this to exit code 3
struct guard_error : error {
    using error::error;
};

class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> labels)
        : labels_(std::move(labels)) {
        if (labels_.empty())
            throw input_error("ground set must be non-empty");
        for (const auto& l : labels_)
            if (l.empty())
                throw input_error("ground-set labels must be non-empty");
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("ground-set labels must be distinct");
    }

    int n() const { return static_cast<int>(labels_.size()); }

    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

    const std::vector<std::string>& labels() const { return labels_; }

    int index(const std::string& label) const {
        for (int i = 0; i < n(); ++i)
            if (labels_[static_cast<std::size_t>(i)] == label)
                return i;
        throw input_error("unknown label: " + label);
    }

    bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }
    bool operator!=(const GroundSet& o) const { return !(*this == o); }

private:
    std::vector<std::string> labels_;
};

using Ground = std::shared_ptr<const GroundSet>;

inline Ground make_ground(std::vector<std::string> labels) {
    return std::make_shared<const GroundSet>(std::move(labels));
}

// default ground set a, b, c, ... for CLI-style "--n" usage
inline Ground make_ground(int n) {
    if (n < 1 || n > 26)
        throw guard_error("default ground set supports 1 <= n <= 26");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return make_ground(std::move(labels));
}

inline void require_same_ground(const Ground& a, const Ground& b) {
    if (!a || !b || *a != *b)
        throw error("ground-set mismatch");
}

// Subsets of the ground set are bitmasks over canonical label positions.
using Mask = std::uint32_t;

inline Mask bit(int i) { return Mask{1} << i; }

inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }

inline bool contains(Mask s, int i) { return (s >> i) & 1u; }

inline int popcount(Mask s) { return __builtin_popcount(s); }

inline std::vector<std::string> mask_labels(const Ground& g, Mask s) {
    std::vector<std::string> out;
    for (int i = 0; i < g->n(); ++i)
        if (contains(s, i))
            out.push_back(g->label(i));
    return out;
}

inline std::string mask_to_string(const Ground& g, Mask s) {
    if (s == 0)
        return "{}";
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < g->n(); ++i)
        if (contains(s, i)) {
            if (!first)
                out += ",";
            out += g->label(i);
            first = false;
        }
    return out + "}";
}

// Unordered pair of distinct ground elements (permutohedral edge label).
struct LabelPair {
    int u, v;  // normalized u < v

    LabelPair(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b)
            throw error("label pair needs two distinct elements");
    }

    bool operator==(const LabelPair& o) const { return u == o.u && v == o.v; }
    bool operator<(const LabelPair& o) const {
        return u != o.u ? u < o.u : v < o.v;
    }
};

// Binary relation on N x N; row u holds the bitmask of v with (u,v) present.
class Relation {
public:
    explicit Relation(Ground g) : ground_(std::move(g)), rows_(static_cast<std::size_t>(ground_->n()), 0) {}

    Relation(Ground g, std::vector<Mask> rows) : ground_(std::move(g)), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != ground_->n())
            throw error("relation row count mismatch");
        for (Mask r : rows_)
            if (r & ~full_mask(ground_->n()))
                throw error("relation row out of range");
    }

    const Ground& ground() const { return ground_; }
    int n() const { return ground_->n(); }

    bool has(int u, int v) const { return contains(rows_[static_cast<std::size_t>(u)], v); }
    void add(int u, int v) { rows_[static_cast<std::size_t>(u)] |= bit(v); }
    void remove(int u, int v) { rows_[static_cast<std::size_t>(u)] &= ~bit(v); }

    Mask row(int u) const { return rows_[static_cast<std::size_t>(u)]; }
    const std::vector<Mask>& rows() const { return rows_; }

    std::size_t pair_count() const {
        std::size_t c = 0;
        for (Mask r : rows_)
            c += static_cast<std::size_t>(popcount(r));
        return c;
    }

    bool operator==(const Relation& o) const {
        return *ground_ == *o.ground_ && rows_ == o.rows_;
    }
    bool operator!=(const Relation& o) const { return !(*this == o); }
    bool operator<(const Relation& o) const { return rows_ < o.rows_; }

    // containment as pair sets
    bool subset_of(const Relation& o) const {
        require_same_ground(ground_, o.ground_);
        for (int u = 0; u < n(); ++u)
            if (rows_[static_cast<std::size_t>(u)] & ~o.rows_[static_cast<std::size_t>(u)])
                return false;
        return true;
    }

private:
    Ground ground_;
    std::vector<Mask> rows_;
};

inline Relation diagonal_relation(const Ground& g) {
    Relation r(g);
    for (int i = 0; i < g->n(); ++i)
        r.add(i, i);
    return r;
}

inline Relation full_relation(const Ground& g) {
    std::vector<Mask> rows(static_cast<std::size_t>(g->n()), full_mask(g->n()));
    return Relation(g, std::move(rows));
}

inline Relation relation_union(const Relation& a, const Relation& b) {
    require_same_ground(a.ground(), b.ground());
    Relation out = a;
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < a.n(); ++v)
            if (b.has(u, v))
                out.add(u, v);
    return out;
}

inline Relation relation_intersection(const Relation& a, const Relation& b) {
    require_same_ground(a.ground(), b.ground());
    std::vector<Mask> rows;
    for (int u = 0; u < a.n(); ++u)
        rows.push_back(a.row(u) & b.row(u));
    return Relation(a.ground(), std::move(rows));
}

inline Relation opposite(const Relation& r) {
    Relation out(r.ground());
    for (int u = 0; u < r.n(); ++u)
        for (int v = 0; v < r.n(); ++v)
            if (r.has(u, v))
                out.add(v, u);
    return out;
}

// Family of subsets of the ground set, kept sorted for determinism.
class SetSystem {
public:
    explicit SetSystem(Ground g) : ground_(std::move(g)) {}

    SetSystem(Ground g, std::set<Mask> members)
        : ground_(std::move(g)), members_(std::move(members)) {
        for (Mask m : members_)
            if (m & ~full_mask(ground_->n()))
                throw error("set-system member out of range");
    }

    const Ground& ground() const { return ground_; }
    const std::set<Mask>& members() const { return members_; }

    bool has(Mask m) const { return members_.count(m) > 0; }
    void insert(Mask m) { members_.insert(m); }
    std::size_t size() const { return members_.size(); }

    bool operator==(const SetSystem& o) const {
        return *ground_ == *o.ground_ && members_ == o.members_;
    }
    bool operator!=(const SetSystem& o) const { return !(*this == o); }
    bool operator<(const SetSystem& o) const { return members_ < o.members_; }

    bool subset_of(const SetSystem& o) const {
        require_same_ground(ground_, o.ground_);
        return std::includes(o.members_.begin(), o.members_.end(),
                             members_.begin(), members_.end());
    }

private:
    Ground ground_;
    std::set<Mask> members_;
};

// Vector in Q^N indexed by ground position; exact entries only.
class RationalVector {
public:
    explicit RationalVector(Ground g)
        : ground_(std::move(g)), entries_(static_cast<std::size_t>(ground_->n()), Rat(0)) {}

    RationalVector(Ground g, std::vector<Rat> entries)
        : ground_(std::move(g)), entries_(std::move(entries)) {
        if (static_cast<int>(entries_.size()) != ground_->n())
            throw error("rational vector size mismatch");
    }

    const Ground& ground() const { return ground_; }
    int n() const { return ground_->n(); }

    const Rat& at(int i) const { return entries_[static_cast<std::size_t>(i)]; }
    Rat& at(int i) { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<Rat>& entries() const { return entries_; }

    Rat sum_over(Mask s) const {
        Rat total = 0;
        for (int i = 0; i < n(); ++i)
            if (contains(s, i))
                total += entries_[static_cast<std::size_t>(i)];
        return total;
    }

    bool operator==(const RationalVector& o) const {
        return *ground_ == *o.ground_ && entries_ == o.entries_;
    }
    bool operator!=(const RationalVector& o) const { return !(*this == o); }
    bool operator<(const RationalVector& o) const { return entries_ < o.entries_; }

private:
    Ground ground_;
    std::vector<Rat> entries_;
};

inline RationalVector incidence_vector(const Ground& g, Mask s) {
    RationalVector x(g);
    for (int i = 0; i < g->n(); ++i)
        if (contains(s, i))
            x.at(i) = 1;
    return x;
}

inline RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    require_same_ground(a.ground(), b.ground());
    RationalVector out = a;
    for (int i = 0; i < a.n(); ++i)
        out.at(i) += b.at(i);
    return out;
}

inline RationalVector operator-(const RationalVector& a, const RationalVector& b) {
    require_same_ground(a.ground(), b.ground());
    RationalVector out = a;
    for (int i = 0; i < a.n(); ++i)
        out.at(i) -= b.at(i);
    return out;
}

inline RationalVector operator*(const Rat& c, const RationalVector& x) {
    RationalVector out = x;
    for (int i = 0; i < x.n(); ++i)
        out.at(i) *= c;
    return out;
}

// splitmix64: splittable 64-bit generator (Steele, Lea, Flood constants);
// the seed is the sole source of entropy for everything randomized.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // value in [0, bound); bound > 0
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

}  // namespace supmod
