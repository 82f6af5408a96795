#pragma once

// Enumerations of the ground set and the permutohedral graph: rank vectors,
// adjacent transpositions, inversions, geodesics, and geodetic convexity.

#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "supmod/core.hpp"

namespace supmod {

inline constexpr int kEnumGuard = 8;  // n! materialization cap

class Enumeration {
public:
    Enumeration(Ground g, std::vector<int> order)
        : ground_(std::move(g)), order_(std::move(order)) {
        const int n = ground_->n();
        if (static_cast<int>(order_.size()) != n)
            throw error("enumeration length mismatch");
        Mask seen = 0;
        for (int e : order_) {
            if (e < 0 || e >= n || contains(seen, e))
                throw error("enumeration is not a permutation");
            seen |= bit(e);
        }
    }

    static Enumeration from_labels(const Ground& g, const std::vector<std::string>& labels) {
        std::vector<int> order;
        for (const auto& l : labels)
            order.push_back(g->index(l));
        return Enumeration(g, std::move(order));
    }

    const Ground& ground() const { return ground_; }
    int n() const { return ground_->n(); }

    int at(int pos) const { return order_[static_cast<std::size_t>(pos)]; }
    const std::vector<int>& order() const { return order_; }

    int position(int elem) const {
        for (int i = 0; i < n(); ++i)
            if (order_[static_cast<std::size_t>(i)] == elem)
                return i;
        throw error("element not in enumeration");
    }

    // the first k listed elements, as a subset
    Mask prefix(int k) const {
        Mask m = 0;
        for (int i = 0; i < k; ++i)
            m |= bit(order_[static_cast<std::size_t>(i)]);
        return m;
    }

    Enumeration swap_positions(int i) const {
        auto order = order_;
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i) + 1]);
        return Enumeration(ground_, std::move(order));
    }

    std::string to_string() const {
        std::string out = "|";
        for (int e : order_)
            out += ground_->label(e) + "|";
        return out;
    }

    bool operator==(const Enumeration& o) const {
        return *ground_ == *o.ground_ && order_ == o.order_;
    }
    bool operator!=(const Enumeration& o) const { return !(*this == o); }
    bool operator<(const Enumeration& o) const { return order_ < o.order_; }

private:
    Ground ground_;
    std::vector<int> order_;
};

class EnumSet {
public:
    explicit EnumSet(Ground g) : ground_(std::move(g)) {}

    EnumSet(Ground g, std::set<Enumeration> members)
        : ground_(std::move(g)), members_(std::move(members)) {
        for (const auto& e : members_)
            require_same_ground(ground_, e.ground());
    }

    const Ground& ground() const { return ground_; }
    const std::set<Enumeration>& members() const { return members_; }

    bool has(const Enumeration& e) const { return members_.count(e) > 0; }
    void insert(const Enumeration& e) {
        require_same_ground(ground_, e.ground());
        members_.insert(e);
    }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool operator==(const EnumSet& o) const {
        return *ground_ == *o.ground_ && members_ == o.members_;
    }
    bool operator!=(const EnumSet& o) const { return !(*this == o); }

    bool subset_of(const EnumSet& o) const {
        require_same_ground(ground_, o.ground());
        for (const auto& e : members_)
            if (!o.has(e))
                return false;
        return true;
    }

private:
    Ground ground_;
    std::set<Enumeration> members_;
};

inline void require_enum_guard(const Ground& g) {
    if (g->n() > kEnumGuard)
        throw guard_error("enumeration-set operations are guarded to n <= 8");
}

// all n! enumerations, lexicographic in canonical label order
inline EnumSet all_enumerations(const Ground& g) {
    require_enum_guard(g);
    std::vector<int> order(static_cast<std::size_t>(g->n()));
    for (int i = 0; i < g->n(); ++i)
        order[static_cast<std::size_t>(i)] = i;
    EnumSet out(g);
    do {
        out.insert(Enumeration(g, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

inline RationalVector rank_vector(const Enumeration& pi) {
    RationalVector r(pi.ground());
    for (int pos = 0; pos < pi.n(); ++pos)
        r.at(pi.at(pos)) = pos + 1;
    return r;
}

inline std::optional<LabelPair> adjacency_label(const Enumeration& pi, const Enumeration& rho) {
    require_same_ground(pi.ground(), rho.ground());
    int first = -1;
    for (int i = 0; i < pi.n(); ++i)
        if (pi.at(i) != rho.at(i)) {
            first = i;
            break;
        }
    if (first < 0 || first + 1 >= pi.n())
        return std::nullopt;
    if (pi.at(first) != rho.at(first + 1) || pi.at(first + 1) != rho.at(first))
        return std::nullopt;
    for (int i = first + 2; i < pi.n(); ++i)
        if (pi.at(i) != rho.at(i))
            return std::nullopt;
    return LabelPair(pi.at(first), pi.at(first + 1));
}

inline std::set<LabelPair> inversions_between(const Enumeration& pi, const Enumeration& rho) {
    require_same_ground(pi.ground(), rho.ground());
    std::set<LabelPair> out;
    for (int u = 0; u < pi.n(); ++u)
        for (int v = u + 1; v < pi.n(); ++v) {
            const bool in_pi = pi.position(u) < pi.position(v);
            const bool in_rho = rho.position(u) < rho.position(v);
            if (in_pi != in_rho)
                out.insert(LabelPair(u, v));
        }
    return out;
}

// shortest-walk length in the permutohedral graph; independent oracle for
// the inversion-count formula
inline int bfs_distance(const Enumeration& pi, const Enumeration& rho) {
    require_same_ground(pi.ground(), rho.ground());
    require_enum_guard(pi.ground());
    if (pi == rho)
        return 0;
    std::map<std::vector<int>, int> dist;
    std::deque<Enumeration> queue{pi};
    dist[pi.order()] = 0;
    while (!queue.empty()) {
        Enumeration cur = queue.front();
        queue.pop_front();
        const int d = dist[cur.order()];
        for (int i = 0; i + 1 < cur.n(); ++i) {
            Enumeration next = cur.swap_positions(i);
            if (dist.count(next.order()))
                continue;
            if (next == rho)
                return d + 1;
            dist[next.order()] = d + 1;
            queue.push_back(next);
        }
    }
    throw error("permutohedral graph is connected; unreachable");
}

inline bool is_between(const Enumeration& pi, const Enumeration& sigma, const Enumeration& rho) {
    require_same_ground(pi.ground(), sigma.ground());
    require_same_ground(pi.ground(), rho.ground());
    for (int u = 0; u < pi.n(); ++u)
        for (int v = u + 1; v < pi.n(); ++v) {
            const bool in_pi = pi.position(u) < pi.position(v);
            const bool in_sigma = sigma.position(u) < sigma.position(v);
            const bool in_rho = rho.position(u) < rho.position(v);
            // sigma may not disagree with both endpoints' common order
            if (in_pi == in_rho && in_sigma != in_pi)
                return false;
        }
    return true;
}

inline bool is_geodetically_convex(const EnumSet& s) {
    if (s.size() <= 1)
        return true;
    const EnumSet all = all_enumerations(s.ground());
    for (const auto& pi : s.members())
        for (const auto& rho : s.members()) {
            if (!(pi < rho))
                continue;
            for (const auto& sigma : all.members())
                if (!s.has(sigma) && is_between(pi, sigma, rho))
                    return false;
        }
    return true;
}

// labels of internal edges of S
inline std::set<LabelPair> inversions_in_set(const EnumSet& s) {
    if (s.empty())
        throw error("inversions_in_set needs a non-empty set");
    std::set<LabelPair> out;
    for (const auto& pi : s.members())
        for (int i = 0; i + 1 < pi.n(); ++i)
            if (s.has(pi.swap_positions(i)))
                out.insert(LabelPair(pi.at(i), pi.at(i + 1)));
    return out;
}

// oriented labels of boundary edges of S: (u,v) with u before v on the
// inside endpoint
inline Relation covering_of_set(const EnumSet& s) {
    if (s.empty())
        throw error("covering_of_set needs a non-empty set");
    Relation out(s.ground());
    for (const auto& pi : s.members())
        for (int i = 0; i + 1 < pi.n(); ++i)
            if (!s.has(pi.swap_positions(i)))
                out.add(pi.at(i), pi.at(i + 1));
    return out;
}

inline EnumSet halfspace_set(const Ground& g, int u, int v) {
    if (u == v)
        throw error("halfspace_set needs distinct elements");
    EnumSet out(g);
    const EnumSet all = all_enumerations(g);
    for (const auto& pi : all.members())
        if (pi.position(u) < pi.position(v))
            out.insert(pi);
    return out;
}

// relabeling automorphism induced by the transposition of p
inline EnumSet transpose_action(const EnumSet& s, const LabelPair& p) {
    EnumSet out(s.ground());
    for (const auto& pi : s.members()) {
        std::vector<int> order;
        for (int e : pi.order())
            order.push_back(e == p.u ? p.v : e == p.v ? p.u : e);
        out.insert(Enumeration(s.ground(), std::move(order)));
    }
    return out;
}

inline EnumSet closer_set(const Enumeration& pi, const Enumeration& rho) {
    const auto label = adjacency_label(pi, rho);
    if (!label)
        throw error("closer_set needs adjacent enumerations");
    const int u_pos = pi.position(label->u);
    const int v_pos = pi.position(label->v);
    return u_pos < v_pos ? halfspace_set(pi.ground(), label->u, label->v)
                         : halfspace_set(pi.ground(), label->v, label->u);
}

// DOT rendering of the full permutohedral graph with edge labels {u,v}
inline std::string permutohedral_graph_dot(const Ground& g) {
    std::ostringstream out;
    out << "graph permutohedron {\n";
    const EnumSet all = all_enumerations(g);
    for (const auto& pi : all.members())
        out << "  \"" << pi.to_string() << "\";\n";
    for (const auto& pi : all.members())
        for (int i = 0; i + 1 < pi.n(); ++i) {
            Enumeration rho = pi.swap_positions(i);
            if (pi < rho)
                out << "  \"" << pi.to_string() << "\" -- \"" << rho.to_string()
                    << "\" [label=\"{" << g->label(std::min(pi.at(i), pi.at(i + 1)))
                    << "," << g->label(std::max(pi.at(i), pi.at(i + 1))) << "}\"];\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace supmod
