#pragma once

// Supermodular games: elementary imsets and their deltas, marginal vectors,
// core vertices and tightness classes, the CI structure, vertex posets, and
// seeded random game generation.

#include <map>

#include "supmod/cones.hpp"

namespace supmod {

class Game {
public:
    Game(Ground g, std::vector<Rat> values)
        : ground_(std::move(g)), values_(std::move(values)) {
        if (values_.size() != (std::size_t{1} << ground_->n()))
            throw error("game needs a value for every subset");
        if (values_[0] != 0)
            throw error("game value at the empty set must be 0");
    }

    static Game zero(const Ground& g) {
        return Game(g, std::vector<Rat>(std::size_t{1} << g->n(), Rat(0)));
    }

    const Ground& ground() const { return ground_; }
    int n() const { return ground_->n(); }

    const Rat& at(Mask s) const { return values_[s]; }
    const std::vector<Rat>& values() const { return values_; }

    bool operator==(const Game& o) const {
        return *ground_ == *o.ground_ && values_ == o.values_;
    }
    bool operator!=(const Game& o) const { return !(*this == o); }

private:
    Ground ground_;
    std::vector<Rat> values_;
};

inline Game operator+(const Game& a, const Game& b) {
    require_same_ground(a.ground(), b.ground());
    std::vector<Rat> v = a.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += b.values()[i];
    return Game(a.ground(), std::move(v));
}

inline Game operator*(const Rat& c, const Game& g) {
    std::vector<Rat> v = g.values();
    for (auto& x : v)
        x *= c;
    return Game(g.ground(), std::move(v));
}

struct ElementaryTriplet {
    int a, b;  // normalized a < b
    Mask c;

    ElementaryTriplet(int a_, int b_, Mask c_)
        : a(std::min(a_, b_)), b(std::max(a_, b_)), c(c_) {
        if (a_ == b_)
            throw error("elementary triplet needs distinct a, b");
        if (c & (bit(a) | bit(b)))
            throw error("elementary triplet context must avoid {a,b}");
    }

    bool operator==(const ElementaryTriplet& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
    bool operator<(const ElementaryTriplet& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// canonical triplet order: (a, b) lexicographic, then context mask ascending
inline std::vector<ElementaryTriplet> all_triplets(const Ground& g) {
    const int n = g->n();
    std::vector<ElementaryTriplet> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const Mask rest = full_mask(n) & ~(bit(a) | bit(b));
            // iterate submasks of rest in ascending numeric order
            for (Mask c = 0;; c = (c - rest) & rest) {
                out.push_back(ElementaryTriplet(a, b, c));
                if (c == rest)
                    break;
            }
        }
    return out;
}

// the four nonzero coefficients of u_(a,b|C), as subset -> integer
inline std::map<Mask, Int> elementary_imset(const ElementaryTriplet& t) {
    std::map<Mask, Int> coeff;
    coeff[t.c | bit(t.a) | bit(t.b)] += 1;
    coeff[t.c] += 1;
    coeff[t.c | bit(t.a)] -= 1;
    coeff[t.c | bit(t.b)] -= 1;
    return coeff;
}

inline Rat delta(const Game& g, const ElementaryTriplet& t) {
    const Mask ab = bit(t.a) | bit(t.b);
    return g.at(t.c | ab) + g.at(t.c) - g.at(t.c | bit(t.a)) - g.at(t.c | bit(t.b));
}

inline bool is_supermodular(const Game& g) {
    for (const auto& t : all_triplets(g.ground()))
        if (delta(g, t) < 0)
            return false;
    return true;
}

// the D,E-form of supermodularity; kept as an independent oracle
inline bool is_supermodular_de(const Game& g) {
    const Mask top = full_mask(g.n());
    for (Mask d = 0; d <= top; ++d)
        for (Mask e = 0; e <= top; ++e)
            if (g.at(d | e) + g.at(d & e) < g.at(d) + g.at(e))
                return false;
    return true;
}

inline void require_supermodular(const Game& g, const char* op) {
    if (!is_supermodular(g))
        throw error(std::string(op) + " needs a supermodular game");
}

inline Game unanimity_game(const Ground& g, Mask b) {
    if (b == 0)
        throw error("unanimity game needs a non-empty carrier");
    std::vector<Rat> v(std::size_t{1} << g->n(), Rat(0));
    for (Mask s = 0; s <= full_mask(g->n()); ++s)
        if ((s & b) == b)
            v[s] = 1;
    return Game(g, std::move(v));
}

inline RationalVector marginal_vector(const Game& g, const Enumeration& pi) {
    require_same_ground(g.ground(), pi.ground());
    RationalVector m(g.ground());
    for (int i = 0; i < pi.n(); ++i)
        m.at(pi.at(i)) = g.at(pi.prefix(i + 1)) - g.at(pi.prefix(i));
    return m;
}

// distinct marginal vectors with their fibers; keys are the core vertices
inline std::map<RationalVector, EnumSet> core_vertices(const Game& g) {
    require_supermodular(g, "core_vertices");
    std::map<RationalVector, EnumSet> out;
    const EnumSet all = all_enumerations(g.ground());
    for (const auto& pi : all.members()) {
        RationalVector m = marginal_vector(g, pi);
        auto it = out.find(m);
        if (it == out.end())
            it = out.emplace(std::move(m), EnumSet(g.ground())).first;
        it->second.insert(pi);
    }
    return out;
}

inline SetSystem tightness_class(const Game& g, const RationalVector& y) {
    require_same_ground(g.ground(), y.ground());
    SetSystem out(g.ground());
    for (Mask s = 0; s <= full_mask(g.n()); ++s)
        if (y.sum_over(s) == g.at(s))
            out.insert(s);
    return out;
}

inline bool core_contains(const Game& g, const RationalVector& z) {
    require_same_ground(g.ground(), z.ground());
    if (z.sum_over(full_mask(g.n())) != g.at(full_mask(g.n())))
        return false;
    for (Mask s = 0; s <= full_mask(g.n()); ++s)
        if (z.sum_over(s) < g.at(s))
            return false;
    return true;
}

// every value is attained as a support minimum over the core vertices
inline bool exactness_check(const Game& g) {
    require_supermodular(g, "exactness_check");
    const auto vertices = core_vertices(g);
    for (Mask s = 0; s <= full_mask(g.n()); ++s) {
        bool first = true;
        Rat best = 0;
        for (const auto& [y, fiber] : vertices) {
            const Rat v = y.sum_over(s);
            if (first || v < best) {
                best = v;
                first = false;
            }
        }
        if (best != g.at(s))
            return false;
    }
    return true;
}

inline std::set<ElementaryTriplet> ci_structure(const Game& g) {
    require_supermodular(g, "ci_structure");
    std::set<ElementaryTriplet> out;
    for (const auto& t : all_triplets(g.ground()))
        if (delta(g, t) == 0)
            out.insert(t);
    return out;
}

// CI through tightness: some core vertex keeps both aC and bC tight
inline bool ci_via_tightness(const Game& g, const ElementaryTriplet& t) {
    require_supermodular(g, "ci_via_tightness");
    const Mask ac = t.c | bit(t.a);
    const Mask bc = t.c | bit(t.b);
    for (const auto& [y, fiber] : core_vertices(g)) {
        if (y.sum_over(ac) == g.at(ac) && y.sum_over(bc) == g.at(bc))
            return true;
    }
    return false;
}

// Poset of the fiber of a core vertex. Two constructions are computed and
// must agree: the Galois relation of the fiber, and the transitive closure
// of the vertex-difference relation z - y = k (chi_u - chi_v), k > 0.
inline Relation vertex_poset(const Game& g, const RationalVector& y) {
    require_supermodular(g, "vertex_poset");
    const auto vertices = core_vertices(g);
    const auto it = vertices.find(y);
    if (it == vertices.end())
        throw error("vertex_poset needs a core vertex");
    const Relation from_fiber = galois_enums_to_relation(it->second);

    Relation differences(g.ground());
    for (const auto& [z, fiber] : vertices) {
        if (z == y)
            continue;
        int u = -1, v = -1;
        bool elementary = true;
        Rat up = 0, down = 0;
        for (int e = 0; e < g.n() && elementary; ++e) {
            const Rat d = z.at(e) - y.at(e);
            if (d == 0)
                continue;
            if (d > 0) {
                elementary = u < 0;
                u = e;
                up = d;
            } else {
                elementary = v < 0;
                v = e;
                down = -d;
            }
        }
        if (elementary && u >= 0 && v >= 0 && up == down)
            differences.add(u, v);
    }
    const Relation from_differences = preposet_closure(differences);
    if (from_fiber != from_differences)
        throw error("vertex_poset constructions disagree");
    return from_fiber;
}

struct RandomGameParams {
    int n = 3;
    int terms = 4;
    int max_coeff = 3;
};

// seeded nonnegative combination of unanimity games plus a modular part
inline Game random_supermodular(std::uint64_t seed, const RandomGameParams& params) {
    if (params.n < 1)
        throw error("random_supermodular needs n >= 1");
    const Ground g = make_ground(params.n);
    SplitMix64 rng(seed);
    Game out = Game::zero(g);
    const Mask top = full_mask(params.n);
    for (int j = 0; j < params.terms; ++j) {
        Mask b = 0;
        while (popcount(b) < 2 && params.n >= 2)
            b = static_cast<Mask>(rng.below(top + 1));
        const Rat c = static_cast<long>(rng.below(static_cast<std::uint64_t>(params.max_coeff) + 1));
        if (params.n >= 2)
            out = out + c * unanimity_game(g, b);
    }
    // modular part: per-element weights in [-max_coeff, max_coeff]
    std::vector<Rat> modular(std::size_t{1} << params.n, Rat(0));
    std::vector<long> weight(static_cast<std::size_t>(params.n));
    for (auto& w : weight)
        w = static_cast<long>(rng.below(2 * static_cast<std::uint64_t>(params.max_coeff) + 1)) - params.max_coeff;
    for (Mask s = 0; s <= top; ++s)
        for (int e = 0; e < params.n; ++e)
            if (contains(s, e))
                modular[s] += weight[static_cast<std::size_t>(e)];
    out = out + Game(g, std::move(modular));
    require_supermodular(out, "random_supermodular");
    return out;
}

}  // namespace supmod
