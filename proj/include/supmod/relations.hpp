#pragma once

// Posets, preposets, tosets; transitive closures, the Galois connection
// between enumeration sets and relations, linear extensions, contraction,
// Hasse diagrams, and poset dimension.

#include "supmod/permutograph.hpp"

namespace supmod {

inline Relation transitive_closure(const Relation& r) {
    Relation out = r;
    std::vector<Mask> rows(out.rows());
    const int n = r.n();
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            if (contains(rows[static_cast<std::size_t>(u)], k))
                rows[static_cast<std::size_t>(u)] |= rows[static_cast<std::size_t>(k)];
    return Relation(r.ground(), std::move(rows));
}

struct RelationFlags {
    bool reflexive = false;
    bool transitive = false;
    bool antisymmetric = false;
    bool acyclic_offdiagonal = false;
    bool is_poset = false;
    bool is_preposet = false;
    bool is_toset = false;
};

inline RelationFlags classify(const Relation& r) {
    const int n = r.n();
    RelationFlags f;
    f.reflexive = true;
    for (int u = 0; u < n; ++u)
        if (!r.has(u, u))
            f.reflexive = false;
    f.transitive = transitive_closure(r) == r;
    f.antisymmetric = true;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (r.has(u, v) && r.has(v, u))
                f.antisymmetric = false;
    // a directed cycle in R minus the diagonal shows up as a loop in the
    // transitive closure of the off-diagonal part
    Relation off = r;
    for (int u = 0; u < n; ++u)
        off.remove(u, u);
    const Relation off_cl = transitive_closure(off);
    f.acyclic_offdiagonal = true;
    for (int u = 0; u < n; ++u)
        if (off_cl.has(u, u))
            f.acyclic_offdiagonal = false;
    f.is_preposet = f.reflexive && f.transitive;
    f.is_poset = f.is_preposet && f.antisymmetric;
    f.is_toset = f.is_poset;
    if (f.is_toset)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!r.has(u, v) && !r.has(v, u))
                    f.is_toset = false;
    return f;
}

inline Relation preposet_closure(const Relation& t) {
    return transitive_closure(relation_union(t, diagonal_relation(t.ground())));
}

// closure in the poset lattice: full relation once a cycle appears
inline Relation precedes_closure(const Relation& t) {
    if (!classify(t).acyclic_offdiagonal)
        return full_relation(t.ground());
    return preposet_closure(t);
}

inline Relation toset_of(const Enumeration& pi) {
    Relation out(pi.ground());
    for (int i = 0; i < pi.n(); ++i)
        for (int j = i; j < pi.n(); ++j)
            out.add(pi.at(i), pi.at(j));
    return out;
}

// forward Galois map: intersection of the tosets of S; empty S maps to N x N
inline Relation galois_enums_to_relation(const EnumSet& s) {
    Relation out = full_relation(s.ground());
    for (const auto& pi : s.members())
        out = relation_intersection(out, toset_of(pi));
    return out;
}

namespace detail {

inline void linear_extension_backtrack(const Relation& strict, Mask placed,
                                       std::vector<int>& order, EnumSet& out) {
    const int n = strict.n();
    if (static_cast<int>(order.size()) == n) {
        out.insert(Enumeration(strict.ground(), order));
        return;
    }
    for (int e = 0; e < n; ++e) {
        if (contains(placed, e))
            continue;
        bool source = true;
        for (int u = 0; u < n; ++u)
            if (u != e && !contains(placed, u) && strict.has(u, e)) {
                source = false;
                break;
            }
        if (!source)
            continue;
        order.push_back(e);
        linear_extension_backtrack(strict, placed | bit(e), order, out);
        order.pop_back();
    }
}

}  // namespace detail

// L(T): all enumerations whose toset contains T, in lexicographic order
inline EnumSet linear_extensions(const Relation& t) {
    require_enum_guard(t.ground());
    const Relation closed = preposet_closure(t);
    EnumSet out(t.ground());
    if (!classify(closed).antisymmetric)
        return out;  // a two-cycle admits no consonant total order
    std::vector<int> order;
    detail::linear_extension_backtrack(closed, 0, order, out);
    return out;
}

inline bool is_poset_based(const EnumSet& s) {
    return s == linear_extensions(galois_enums_to_relation(s));
}

// normal-form contraction test: R = tr(T u Q) for some Q inside T^op
// iff it holds for the maximal candidate Q = R n T^op
inline bool is_contraction(const Relation& t, const Relation& r) {
    require_same_ground(t.ground(), r.ground());
    if (!classify(t).is_preposet || !classify(r).is_preposet)
        throw error("is_contraction needs preposet inputs");
    const Relation q = relation_intersection(r, opposite(t));
    return r == transitive_closure(relation_union(t, q));
}

inline Relation hasse(const Relation& t) {
    if (!classify(t).is_poset)
        throw error("hasse needs a poset");
    const int n = t.n();
    Relation out(t.ground());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || !t.has(u, v))
                continue;
            bool covering = true;
            for (int w = 0; w < n; ++w)
                if (w != u && w != v && t.has(u, w) && t.has(w, v)) {
                    covering = false;
                    break;
                }
            if (covering)
                out.add(u, v);
        }
    return out;
}

namespace detail {

inline bool realizer_search(const Relation& t, const std::vector<Relation>& tosets,
                            std::size_t offset, int k, const Relation& acc) {
    if (k == 0)
        return acc == t;
    if (offset + static_cast<std::size_t>(k) > tosets.size())
        return false;
    for (std::size_t i = offset; i + static_cast<std::size_t>(k) <= tosets.size(); ++i)
        if (realizer_search(t, tosets, i + 1, k - 1, relation_intersection(acc, tosets[i])))
            return true;
    return false;
}

}  // namespace detail

// smallest number of linear extensions intersecting to T
inline int poset_dimension(const Relation& t) {
    if (!classify(t).is_poset)
        throw error("poset_dimension needs a poset");
    if (t.n() > 6)
        throw guard_error("poset_dimension is guarded to n <= 6");
    std::vector<Relation> tosets;
    const EnumSet extensions = linear_extensions(t);
    for (const auto& pi : extensions.members())
        tosets.push_back(toset_of(pi));
    for (int k = 1; k <= static_cast<int>(tosets.size()); ++k)
        if (detail::realizer_search(t, tosets, 0, k, full_relation(t.ground())))
            return k;
    throw error("poset has no realizer; unreachable");
}

// height in the poset lattice; -1 for the empty set by convention
inline int height_of(const EnumSet& s) {
    if (!is_poset_based(s))
        throw error("height_of needs a poset-based enumeration set");
    if (s.empty())
        return -1;
    return static_cast<int>(inversions_in_set(s).size());
}

}  // namespace supmod
