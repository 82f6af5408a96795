#pragma once

// Braid cones represented canonically by preposets. Every geometric
// predicate reduces to relation containment or closure; membership and
// generators are the only places rational vectors appear.

#include <optional>

#include "supmod/setsystems.hpp"

namespace supmod {

class BraidCone {
public:
    explicit BraidCone(Relation preposet) : preposet_(std::move(preposet)) {
        if (!classify(preposet_).is_preposet)
            throw error("braid cone needs a canonical preposet");
    }

    const Relation& preposet() const { return preposet_; }
    const Ground& ground() const { return preposet_.ground(); }

    bool operator==(const BraidCone& o) const { return preposet_ == o.preposet_; }
    bool operator!=(const BraidCone& o) const { return !(*this == o); }

private:
    Relation preposet_;
};

inline BraidCone cone_of(const Relation& t) {
    return BraidCone(preposet_closure(t));
}

inline bool cone_contains(const BraidCone& c, const RationalVector& x) {
    require_same_ground(c.ground(), x.ground());
    const Relation& t = c.preposet();
    for (int u = 0; u < t.n(); ++u)
        for (int v = 0; v < t.n(); ++v)
            if (t.has(u, v) && x.at(u) > x.at(v))
                return false;
    return true;
}

// chi_N plus the negated indicator of every down-set; spans the cone
inline std::vector<RationalVector> cone_generators(const BraidCone& c) {
    std::vector<RationalVector> out;
    out.push_back(incidence_vector(c.ground(), full_mask(c.ground()->n())));
    const SetSystem down = downsets_of(c.preposet());
    for (Mask d : down.members())
        out.push_back(Rat(-1) * incidence_vector(c.ground(), d));
    return out;
}

// cone inclusion is reverse preposet inclusion
inline bool cone_subset(const BraidCone& c1, const BraidCone& c2) {
    require_same_ground(c1.ground(), c2.ground());
    return c2.preposet().subset_of(c1.preposet());
}

inline bool is_face_of(const BraidCone& cr, const BraidCone& ct) {
    require_same_ground(cr.ground(), ct.ground());
    return is_contraction(ct.preposet(), cr.preposet());
}

inline bool is_full_dimensional(const BraidCone& c) {
    return classify(c.preposet()).antisymmetric;
}

inline BraidCone weyl_chamber(const Enumeration& pi) {
    return cone_of(toset_of(pi));
}

// the union of the chambers of S is a (braid) cone iff S is poset-based
inline std::optional<BraidCone> chamber_union_cone(const EnumSet& s) {
    if (s.empty())
        throw error("chamber_union_cone needs a non-empty set");
    if (!is_poset_based(s))
        return std::nullopt;
    return cone_of(galois_enums_to_relation(s));
}

// Constructive membership certificate: coefficients over cone_generators
// with x = sum of coeff * generator and all coefficients nonnegative.
// Sorting the distinct values of x yields nested down-sets of the preposet,
// which carry the decomposition; none when x lies outside the cone.
inline std::optional<std::vector<Rat>> decompose_in_generators(const BraidCone& c,
                                                               const RationalVector& x) {
    if (!cone_contains(c, x))
        return std::nullopt;
    const int n = c.ground()->n();
    std::vector<Rat> values(x.entries());
    std::vector<Rat> distinct = values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    const SetSystem down = downsets_of(c.preposet());
    const std::vector<RationalVector> gens = cone_generators(c);
    std::vector<Rat> coeff(gens.size(), Rat(0));

    auto downset_coeff = [&](Mask d) -> Rat& {
        std::size_t idx = 1;
        for (Mask m : down.members()) {
            if (m == d)
                return coeff[idx];
            ++idx;
        }
        throw error("level set is not a down-set; unreachable for cone members");
    };

    coeff[0] = distinct.back();  // chi_N carries the top value
    if (coeff[0] < 0) {
        // fold a negative top value into -chi_N, which is always a generator
        downset_coeff(full_mask(n)) += -coeff[0];
        coeff[0] = 0;
    }
    for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
        Mask level = 0;
        for (int e = 0; e < n; ++e)
            if (x.at(e) <= distinct[i])
                level |= bit(e);
        downset_coeff(level) += distinct[i + 1] - distinct[i];
    }
    return coeff;
}

}  // namespace supmod
