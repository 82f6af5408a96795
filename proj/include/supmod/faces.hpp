#pragma once

// Face descriptors of supermodular games, the comparators of the main
// equivalence theorem, face dimension and extremality, double-description
// extreme-ray enumeration at small n, and polymatroid utilities.

#include <bitset>
#include <utility>

#include "supmod/games.hpp"

namespace supmod {

struct FaceDescriptorBundle {
    Ground ground;
    std::vector<EnumSet> en_part;    // fibers of the marginal map, one per core vertex
    std::vector<Relation> fan_pos;   // Galois posets of the fibers, parallel to en_part
    std::vector<SetSystem> ti_str;   // tightness classes of the core vertices
    std::set<ElementaryTriplet> in_str;
    std::set<std::pair<Enumeration, Enumeration>> per_sg_edges;  // normalized first < second
};

inline FaceDescriptorBundle descriptors(const Game& g) {
    require_supermodular(g, "descriptors");
    FaceDescriptorBundle b{g.ground(), {}, {}, {}, {}, {}};
    for (const auto& [y, fiber] : core_vertices(g)) {
        b.en_part.push_back(fiber);
        b.fan_pos.push_back(galois_enums_to_relation(fiber));
        b.ti_str.push_back(tightness_class(g, y));
    }
    b.in_str = ci_structure(g);
    const EnumSet all = all_enumerations(g.ground());
    for (const auto& pi : all.members())
        for (int i = 0; i + 1 < pi.n(); ++i) {
            const ElementaryTriplet t(pi.at(i), pi.at(i + 1), pi.prefix(i));
            if (delta(g, t) != 0)
                continue;
            Enumeration rho = pi.swap_positions(i);
            if (pi < rho)
                b.per_sg_edges.emplace(pi, rho);
        }
    return b;
}

// (v): every block of B sits inside a block of A
inline bool refines_enpart(const FaceDescriptorBundle& b, const FaceDescriptorBundle& a) {
    require_same_ground(b.ground, a.ground);
    for (const auto& block : b.en_part) {
        bool found = false;
        for (const auto& super : a.en_part)
            if (block.subset_of(super)) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

// (vi): every tightness class of B sits inside a class of A
inline bool refines_tistr(const FaceDescriptorBundle& b, const FaceDescriptorBundle& a) {
    require_same_ground(b.ground, a.ground);
    for (const auto& cls : b.ti_str) {
        bool found = false;
        for (const auto& super : a.ti_str)
            if (cls.subset_of(super)) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

// (vii): triplet-set inclusion
inline bool instr_subset(const FaceDescriptorBundle& b, const FaceDescriptorBundle& a) {
    require_same_ground(b.ground, a.ground);
    return std::includes(a.in_str.begin(), a.in_str.end(),
                         b.in_str.begin(), b.in_str.end());
}

// (viii): edge-set inclusion of the permutohedral subgraphs
inline bool subgraph_rel(const FaceDescriptorBundle& b, const FaceDescriptorBundle& a) {
    require_same_ground(b.ground, a.ground);
    return std::includes(a.per_sg_edges.begin(), a.per_sg_edges.end(),
                         b.per_sg_edges.begin(), b.per_sg_edges.end());
}

// (ix), and (iv) through it: every poset of B contains a poset of A;
// containment of braid cones is reverse containment of their preposets,
// so fan refinement needs no fan data structure
inline bool fanpos_sparser(const FaceDescriptorBundle& a, const FaceDescriptorBundle& b) {
    require_same_ground(a.ground, b.ground);
    for (const auto& r : b.fan_pos) {
        bool found = false;
        for (const auto& q : a.fan_pos)
            if (q.subset_of(r)) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

struct InteriorWitness {
    Game gamma_c;
    Rat alpha;  // gamma_b = (1 - alpha) gamma_a + alpha gamma_c
};

// (ii): gamma_b strictly between gamma_a and some supermodular gamma_c.
// The stretching factor beta > 1 comes from the exact slack ratios: each
// triplet with delta_a > delta_b > 0 caps beta at delta_a/(delta_a-delta_b),
// and a triplet with delta_b = 0 != delta_a rules the witness out.
inline std::optional<InteriorWitness> interior_witness(const Game& ga, const Game& gb) {
    require_same_ground(ga.ground(), gb.ground());
    require_supermodular(ga, "interior_witness");
    require_supermodular(gb, "interior_witness");
    if (ga == gb)
        return InteriorWitness{ga, Rat(1, 2)};
    Rat cap = 0;
    bool capped = false;
    for (const auto& t : all_triplets(ga.ground())) {
        const Rat da = delta(ga, t);
        const Rat db = delta(gb, t);
        if (db == 0 && da != 0)
            return std::nullopt;
        if (da > db) {
            const Rat bound = da / (da - db);  // > 1 since db > 0 here
            if (!capped || bound < cap) {
                cap = bound;
                capped = true;
            }
        }
    }
    const Rat beta = capped ? (cap + 1) / 2 : Rat(2);
    Game gc = (1 - beta) * ga + beta * gb;
    if (!is_supermodular(gc))
        throw error("interior witness construction failed; unreachable");
    return InteriorWitness{std::move(gc), 1 / beta};
}

// (iii): the Minkowski decomposition of the core, checked vertexwise via the
// linearity of marginal vectors plus support minima through exactness
inline bool minkowski_check(const Game& ga, const Game& gc, const Rat& alpha) {
    require_same_ground(ga.ground(), gc.ground());
    if (alpha <= 0 || alpha >= 1)
        throw error("minkowski_check needs 0 < alpha < 1");
    require_supermodular(ga, "minkowski_check");
    require_supermodular(gc, "minkowski_check");
    const Game gb = (1 - alpha) * ga + alpha * gc;
    if (!is_supermodular(gb))
        return false;
    const EnumSet all = all_enumerations(ga.ground());
    for (const auto& pi : all.members()) {
        const RationalVector lhs = marginal_vector(gb, pi);
        const RationalVector rhs =
            ((1 - alpha) * marginal_vector(ga, pi)) + (alpha * marginal_vector(gc, pi));
        if (lhs != rhs)
            return false;
    }
    // support minima: gb(S) must split into the two support minima
    const auto va = core_vertices(ga);
    const auto vc = core_vertices(gc);
    auto support_min = [](const std::map<RationalVector, EnumSet>& vertices, Mask s) {
        Rat best = 0;
        bool first = true;
        for (const auto& [y, fiber] : vertices) {
            const Rat v = y.sum_over(s);
            if (first || v < best) {
                best = v;
                first = false;
            }
        }
        return best;
    };
    for (Mask s = 0; s <= full_mask(ga.n()); ++s)
        if (gb.at(s) != (1 - alpha) * support_min(va, s) + alpha * support_min(vc, s))
            return false;
    return true;
}

struct FaceReport {
    bool ii = false, iii = false, iv = false, v = false;
    bool vi = false, vii = false, viii = false, ix = false;
    bool agreement = false;
};

inline FaceReport theorem_report(const Game& ga, const Game& gb) {
    const FaceDescriptorBundle a = descriptors(ga);
    const FaceDescriptorBundle b = descriptors(gb);
    FaceReport r;
    const auto witness = interior_witness(ga, gb);
    r.ii = witness.has_value();
    r.iii = witness && minkowski_check(ga, witness->gamma_c, witness->alpha);
    r.v = refines_enpart(b, a);
    r.vi = refines_tistr(b, a);
    r.vii = instr_subset(b, a);
    r.viii = subgraph_rel(b, a);
    r.ix = fanpos_sparser(a, b);
    r.iv = r.ix;
    r.agreement = r.ii == r.iii && r.ii == r.iv && r.ii == r.v && r.ii == r.vi &&
                  r.ii == r.vii && r.ii == r.viii && r.ii == r.ix;
    return r;
}

// exact rank by rational Gaussian elimination
inline int rational_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty())
        return 0;
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][col] == 0)
                continue;
            const Rat f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// dimension of the linear span of the face generated by gamma: games g with
// g({}) = 0 that annihilate every tight elementary imset
inline int face_dimension(const Game& g) {
    require_supermodular(g, "face_dimension");
    const int n = g.n();
    const std::size_t dim = (std::size_t{1} << n) - 1;  // coordinates for non-empty subsets
    std::vector<std::vector<Rat>> rows;
    for (const auto& t : ci_structure(g)) {
        std::vector<Rat> row(dim, Rat(0));
        for (const auto& [s, c] : elementary_imset(t))
            if (s != 0)
                row[s - 1] += Rat(c);
        rows.push_back(std::move(row));
    }
    return static_cast<int>(dim) - rational_rank(std::move(rows));
}

// lower standardization: zero out the modular part carried by singletons
inline Game standardize(const Game& g) {
    std::vector<Rat> v(g.values());
    for (Mask s = 1; s <= full_mask(g.n()); ++s)
        for (int e = 0; e < g.n(); ++e)
            if (contains(s, e))
                v[s] -= g.at(bit(e));
    return Game(g.ground(), std::move(v));
}

inline bool is_modular(const Game& g) {
    for (const auto& t : all_triplets(g.ground()))
        if (delta(g, t) != 0)
            return false;
    return true;
}

// gamma spans an extreme ray iff its face is one dimension above the
// modular linearity space
inline bool is_extreme(const Game& g) {
    require_supermodular(g, "is_extreme");
    if (is_modular(g))
        throw error("is_extreme needs a non-modular game");
    return face_dimension(g) == g.n() + 1;
}

namespace detail {

inline void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v)
        g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (Int& x : v)
            x /= g;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline int integer_rank(std::vector<std::vector<Int>> m) {
    if (m.empty())
        return 0;
    std::vector<std::vector<Rat>> q;
    for (auto& row : m) {
        std::vector<Rat> r;
        for (auto& x : row)
            r.push_back(Rat(x));
        q.push_back(std::move(r));
    }
    return rational_rank(std::move(q));
}

struct DDRay {
    std::vector<Int> v;
    std::bitset<128> zero;  // tight processed inequalities
};

}  // namespace detail

// Double description for the standardized supermodular cone: coordinates are
// the subsets of size >= 2, inequality rows are the elementary imsets in
// canonical triplet order. Rays come out as primitive integer games.
inline std::vector<Game> extreme_rays(int n, bool force = false) {
    if (n < 2 || n > 5 || (n == 5 && !force))
        throw guard_error("extreme_rays is guarded to 2 <= n <= 4 (n = 5 behind force)");
    const Ground g = make_ground(n);

    std::vector<Mask> coords;  // subsets of size >= 2, ascending
    for (Mask s = 0; s <= full_mask(n); ++s)
        if (popcount(s) >= 2)
            coords.push_back(s);
    std::vector<int> coord_index(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < coords.size(); ++i)
        coord_index[coords[i]] = static_cast<int>(i);
    const std::size_t d = coords.size();

    std::vector<std::vector<Int>> rows;
    for (const auto& t : all_triplets(g)) {
        std::vector<Int> row(d, Int(0));
        for (const auto& [s, c] : elementary_imset(t))
            if (coord_index[s] >= 0)
                row[static_cast<std::size_t>(coord_index[s])] += c;
        rows.push_back(std::move(row));
    }
    if (rows.size() > 128)
        throw guard_error("extreme_rays inequality budget exceeded");

    std::vector<std::vector<Int>> lines;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Int> e(d, Int(0));
        e[i] = 1;
        lines.push_back(std::move(e));
    }
    std::vector<detail::DDRay> rays;

    auto recompute_zero = [&](detail::DDRay& r, std::size_t upto) {
        r.zero.reset();
        for (std::size_t j = 0; j < upto; ++j)
            if (detail::dot(rows[j], r.v) == 0)
                r.zero.set(j);
    };

    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        std::size_t pivot = lines.size();
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (detail::dot(row, lines[i]) != 0) {
                pivot = i;
                break;
            }
        if (pivot < lines.size()) {
            std::vector<Int> l0 = lines[pivot];
            lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(pivot));
            Int d0 = detail::dot(row, l0);
            if (d0 < 0) {
                for (Int& x : l0)
                    x = -x;
                d0 = -d0;
            }
            for (auto& l : lines) {
                const Int dl = detail::dot(row, l);
                for (std::size_t i = 0; i < d; ++i)
                    l[i] = d0 * l[i] - dl * l0[i];
                detail::make_primitive(l);
            }
            for (auto& r : rays) {
                const Int dr = detail::dot(row, r.v);
                for (std::size_t i = 0; i < d; ++i)
                    r.v[i] = d0 * r.v[i] - dr * l0[i];
                detail::make_primitive(r.v);
                recompute_zero(r, k + 1);
            }
            detail::DDRay born{std::move(l0), {}};
            detail::make_primitive(born.v);
            recompute_zero(born, k + 1);
            rays.push_back(std::move(born));
            continue;
        }

        std::vector<detail::DDRay> keep, plus, minus;
        for (auto& r : rays) {
            const Int s = detail::dot(row, r.v);
            if (s == 0) {
                r.zero.set(k);
                keep.push_back(std::move(r));
            } else if (s > 0) {
                plus.push_back(std::move(r));
            } else {
                minus.push_back(std::move(r));
            }
        }
        const int target = static_cast<int>(d) - static_cast<int>(lines.size()) - 2;
        for (const auto& p : plus)
            for (const auto& m : minus) {
                const auto common = p.zero & m.zero;
                if (static_cast<int>(common.count()) < target)
                    continue;
                std::vector<std::vector<Int>> active;
                for (std::size_t j = 0; j < k; ++j)
                    if (common.test(j))
                        active.push_back(rows[j]);
                if (detail::integer_rank(std::move(active)) != target)
                    continue;
                const Int dp = detail::dot(row, p.v);
                const Int dm = detail::dot(row, m.v);
                std::vector<Int> v(d);
                for (std::size_t i = 0; i < d; ++i)
                    v[i] = dp * m.v[i] - dm * p.v[i];
                detail::DDRay born{std::move(v), {}};
                detail::make_primitive(born.v);
                recompute_zero(born, k + 1);
                keep.push_back(std::move(born));
            }
        for (auto& p : plus)
            keep.push_back(std::move(p));
        rays = std::move(keep);
    }

    if (!lines.empty())
        throw error("standardized supermodular cone must be pointed; unreachable");

    std::vector<std::vector<Int>> sorted;
    for (auto& r : rays)
        sorted.push_back(std::move(r.v));
    std::sort(sorted.begin(), sorted.end());
    std::vector<Game> out;
    for (const auto& v : sorted) {
        std::vector<Rat> values(std::size_t{1} << n, Rat(0));
        for (std::size_t i = 0; i < d; ++i)
            values[coords[i]] = Rat(v[i]);
        out.push_back(Game(g, std::move(values)));
    }
    return out;
}

// the reflection b(S) = gamma(N) - gamma(N \ S) exchanging super- and
// submodularity; an involution
inline Game submodular_reflect(const Game& g) {
    const Mask top = full_mask(g.n());
    std::vector<Rat> v(std::size_t{1} << g.n());
    for (Mask s = 0; s <= top; ++s)
        v[s] = g.at(top) - g.at(top & ~s);
    return Game(g.ground(), std::move(v));
}

inline bool is_polymatroid(const Game& h) {
    for (Mask s = 0; s <= full_mask(h.n()); ++s)
        for (int e = 0; e < h.n(); ++e)
            if (!contains(s, e) && h.at(s | bit(e)) < h.at(s))
                return false;
    for (const auto& t : all_triplets(h.ground()))
        if (delta(h, t) > 0)
            return false;
    return true;
}

inline Mask flats_closure(const Game& h, Mask s) {
    if (!is_polymatroid(h))
        throw error("flats_closure needs a polymatroid rank function");
    Mask cl = 0;
    for (int e = 0; e < h.n(); ++e)
        if (h.at(s | bit(e)) == h.at(s))
            cl |= bit(e);
    return cl;
}

inline bool partition_equivalence(const std::vector<Mask>& blocks, Mask s, Mask t) {
    Mask seen = 0;
    for (Mask b : blocks) {
        if (b == 0)
            throw error("partition blocks must be non-empty");
        if (b & seen)
            throw error("partition blocks must be disjoint");
        seen |= b;
    }
    for (Mask b : blocks)
        if (popcount(s & b) != popcount(t & b))
            return false;
    return true;
}

}  // namespace supmod
