#pragma once

// Exhaustive enumeration of small combinatorial families: labeled posets and
// preposets (over relations), finite topologies (over set systems), and
// ordered set partitions. The two enumeration routes cross-check each other.

#include "supmod/setsystems.hpp"

namespace supmod {

struct LatticeCounts {
    std::uint64_t posets = 0;
    std::uint64_t preposets = 0;
    std::uint64_t topologies = 0;
    std::uint64_t ordered_partitions = 0;
};

namespace detail {

template <typename Fn>
void for_each_reflexive_relation(const Ground& g, Fn&& fn) {
    const int n = g->n();
    std::vector<std::pair<int, int>> off;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                off.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << off.size();
    for (std::uint64_t code = 0; code < total; ++code) {
        Relation r = diagonal_relation(g);
        for (std::size_t i = 0; i < off.size(); ++i)
            if ((code >> i) & 1)
                r.add(off[i].first, off[i].second);
        fn(r);
    }
}

}  // namespace detail

inline std::uint64_t count_posets(int n) {
    if (n < 1 || n > 4)
        throw guard_error("count_posets is guarded to 1 <= n <= 4");
    std::uint64_t count = 0;
    detail::for_each_reflexive_relation(make_ground(n), [&](const Relation& r) {
        if (classify(r).is_poset)
            ++count;
    });
    return count;
}

inline std::uint64_t count_preposets(int n) {
    if (n < 1 || n > 4)
        throw guard_error("count_preposets is guarded to 1 <= n <= 4");
    std::uint64_t count = 0;
    detail::for_each_reflexive_relation(make_ground(n), [&](const Relation& r) {
        if (classify(r).is_preposet)
            ++count;
    });
    return count;
}

// families containing {} and N, closed under pairwise intersection and union
inline std::uint64_t count_topologies(int n) {
    if (n < 1 || n > 4)
        throw guard_error("count_topologies is guarded to 1 <= n <= 4");
    const Ground g = make_ground(n);
    const Mask top = full_mask(n);
    std::vector<Mask> middle;
    for (Mask s = 1; s < top; ++s)
        middle.push_back(s);
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << middle.size();
    for (std::uint64_t code = 0; code < total; ++code) {
        std::set<Mask> members{0, top};
        for (std::size_t i = 0; i < middle.size(); ++i)
            if ((code >> i) & 1)
                members.insert(middle[i]);
        if (is_topology(SetSystem(g, std::move(members))))
            ++count;
    }
    return count;
}

// Fubini numbers via the binomial recurrence; these count the non-empty
// faces of the permutohedron
inline std::uint64_t count_ordered_partitions(int n) {
    if (n < 0 || n > 20)
        throw guard_error("count_ordered_partitions is guarded to n <= 20");
    std::vector<std::vector<std::uint64_t>> binom(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        binom[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k)
            a[static_cast<std::size_t>(m)] +=
                binom[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] *
                a[static_cast<std::size_t>(m - k)];
    return a[static_cast<std::size_t>(n)];
}

inline LatticeCounts lattice_counts(int n) {
    LatticeCounts c;
    c.posets = count_posets(n);
    c.preposets = count_preposets(n);
    c.topologies = count_topologies(n);
    c.ordered_partitions = count_ordered_partitions(n);
    return c;
}

}  // namespace supmod
