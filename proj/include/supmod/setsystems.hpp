#pragma once

// Set systems over the power set: down-set classes of preposets, finite
// topologies, maximal chains, the chain lattice, reductions, and counting
// linear extensions through down-sets.

#include "supmod/relations.hpp"

namespace supmod {

inline SetSystem downsets_of(const Relation& t) {
    const int n = t.n();
    // preds[v] = elements that must accompany v in every down-set
    std::vector<Mask> preds(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (t.has(u, v))
                preds[static_cast<std::size_t>(v)] |= bit(u);
    SetSystem out(t.ground());
    for (Mask d = 0; d <= full_mask(n); ++d) {
        bool closed = true;
        for (int v = 0; v < n && closed; ++v)
            if (contains(d, v) && (preds[static_cast<std::size_t>(v)] & ~d))
                closed = false;
        if (closed)
            out.insert(d);
    }
    return out;
}

// backward map of the Birkhoff correspondence; always a preposet
inline Relation relation_of_system(const SetSystem& d) {
    const int n = d.ground()->n();
    Relation out(d.ground());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            bool separated = false;
            for (Mask m : d.members())
                if (contains(m, v) && !contains(m, u)) {
                    separated = true;
                    break;
                }
            if (!separated)
                out.add(u, v);
        }
    return out;
}

inline bool is_topology(const SetSystem& d) {
    const Mask n_mask = full_mask(d.ground()->n());
    if (!d.has(0) || !d.has(n_mask))
        return false;
    for (Mask a : d.members())
        for (Mask b : d.members()) {
            if (!d.has(a & b) || !d.has(a | b))
                return false;
        }
    return true;
}

inline bool distinguishes_points(const SetSystem& d) {
    const int n = d.ground()->n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool separated = false;
            for (Mask m : d.members())
                if (contains(m, u) != contains(m, v)) {
                    separated = true;
                    break;
                }
            if (!separated)
                return false;
        }
    return true;
}

// the n+1 nested prefixes of pi
inline SetSystem max_chain(const Enumeration& pi) {
    SetSystem out(pi.ground());
    for (int k = 0; k <= pi.n(); ++k)
        out.insert(pi.prefix(k));
    return out;
}

inline SetSystem chains_union(const EnumSet& s) {
    SetSystem out(s.ground());
    for (const auto& pi : s.members())
        for (int k = 0; k <= pi.n(); ++k)
            out.insert(pi.prefix(k));
    return out;
}

namespace detail {

inline void chain_backtrack(const SetSystem& d, Mask cur, std::vector<int>& order, EnumSet& out) {
    const int n = d.ground()->n();
    if (static_cast<int>(order.size()) == n) {
        out.insert(Enumeration(d.ground(), order));
        return;
    }
    for (int e = 0; e < n; ++e) {
        if (contains(cur, e) || !d.has(cur | bit(e)))
            continue;
        order.push_back(e);
        chain_backtrack(d, cur | bit(e), order, out);
        order.pop_back();
    }
}

}  // namespace detail

// all enumerations whose maximal chain lies inside D
inline EnumSet enums_of_system(const SetSystem& d) {
    EnumSet out(d.ground());
    if (!d.has(0))
        return out;
    std::vector<int> order;
    detail::chain_backtrack(d, 0, order, out);
    return out;
}

inline bool is_chain_lattice_member(const EnumSet& s) {
    return s == enums_of_system(chains_union(s));
}

// reductions of topologies are exactly contractions of their preposets
inline bool is_reduction(const SetSystem& dt, const SetSystem& dr) {
    if (!is_topology(dt) || !is_topology(dr))
        throw error("is_reduction needs topology inputs");
    return is_contraction(relation_of_system(dt), relation_of_system(dr));
}

// dynamic program over down-sets: count saturated chains from {} to N
inline Int count_linear_extensions(const Relation& t) {
    if (!classify(t).is_poset)
        throw error("count_linear_extensions needs a poset");
    const int n = t.n();
    const SetSystem down = downsets_of(t);
    std::vector<Int> ways(static_cast<std::size_t>(full_mask(n)) + 1, Int(0));
    ways[0] = 1;
    std::vector<Mask> ordered(down.members().begin(), down.members().end());
    std::sort(ordered.begin(), ordered.end(), [](Mask a, Mask b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    for (Mask d : ordered)
        for (int e = 0; e < n; ++e)
            if (!contains(d, e) && down.has(d | bit(e)))
                ways[static_cast<std::size_t>(d | bit(e))] += ways[static_cast<std::size_t>(d)];
    return ways[static_cast<std::size_t>(full_mask(n))];
}

}  // namespace supmod
