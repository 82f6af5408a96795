#include <catch2/catch_amalgamated.hpp>

#include "supmod/catalog.hpp"
#include "supmod/counting.hpp"
#include "supmod/relations.hpp"

using namespace supmod;

namespace {

Enumeration enum_of(const Ground& g, const std::string& word) {
    std::vector<std::string> labels;
    for (char c : word)
        labels.push_back(std::string(1, c));
    return Enumeration::from_labels(g, labels);
}

Relation pairs(const Ground& g, std::initializer_list<std::pair<int, int>> ps) {
    Relation r(g);
    for (const auto& [u, v] : ps)
        r.add(u, v);
    return r;
}

}  // namespace

TEST_CASE("transitive closure") {
    const Ground g = make_ground(3);
    CHECK(transitive_closure(diagonal_relation(g)) == diagonal_relation(g));

    Relation chain = pairs(g, {{0, 1}, {1, 2}});
    Relation chain_closed = pairs(g, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(transitive_closure(chain) == chain_closed);

    Relation cycle = pairs(g, {{0, 1}, {1, 0}});
    Relation cycle_closed = pairs(g, {{0, 1}, {1, 0}, {0, 0}, {1, 1}});
    CHECK(transitive_closure(cycle) == cycle_closed);
}

TEST_CASE("classification flags") {
    const Ground g3 = make_ground(3);
    const auto diag = classify(diagonal_relation(g3));
    CHECK(diag.is_poset);
    CHECK(diag.is_preposet);
    CHECK_FALSE(diag.is_toset);

    const auto total = classify(toset_of(enum_of(g3, "abc")));
    CHECK(total.is_toset);
    CHECK(total.is_poset);

    const Ground g2 = make_ground(2);
    const auto full = classify(full_relation(g2));
    CHECK(full.is_preposet);
    CHECK_FALSE(full.is_poset);
    CHECK_FALSE(full.antisymmetric);
    CHECK_FALSE(full.acyclic_offdiagonal);
}

TEST_CASE("preposet and precedes closures") {
    const Ground g = make_ground(3);
    CHECK(preposet_closure(Relation(g)) == diagonal_relation(g));
    CHECK(preposet_closure(pairs(g, {{0, 1}})) ==
          relation_union(diagonal_relation(g), pairs(g, {{0, 1}})));
    CHECK(preposet_closure(pairs(g, {{0, 1}, {1, 2}})) ==
          relation_union(diagonal_relation(g), pairs(g, {{0, 1}, {1, 2}, {0, 2}})));

    CHECK(precedes_closure(pairs(g, {{0, 1}})) == preposet_closure(pairs(g, {{0, 1}})));
    CHECK(precedes_closure(pairs(g, {{0, 1}, {1, 0}})) == full_relation(g));
    CHECK(precedes_closure(diagonal_relation(g)) == diagonal_relation(g));
}

TEST_CASE("closure axioms for the poset lattice") {
    const Ground g = make_ground(3);
    for (unsigned code = 0; code < 64u; ++code) {
        // arbitrary relations built from off-diagonal pair codes
        Relation r(g);
        std::size_t i = 0;
        for (int u = 0; u < 3; ++u)
            for (int v = 0; v < 3; ++v) {
                if (u == v)
                    continue;
                if ((code >> i) & 1u)
                    r.add(u, v);
                ++i;
            }
        const Relation once = precedes_closure(r);
        CHECK(precedes_closure(once) == once);  // idempotent
        CHECK(r.subset_of(once));               // extensive
        Relation larger = relation_union(r, pairs(g, {{0, 2}}));
        CHECK(once.subset_of(precedes_closure(larger)));  // isotone
    }
}

TEST_CASE("tosets and the Galois maps") {
    const Ground g2 = make_ground(2);
    CHECK(toset_of(enum_of(g2, "ab")) ==
          relation_union(diagonal_relation(g2), pairs(g2, {{0, 1}})));

    const Ground g3 = make_ground(3);
    CHECK(toset_of(enum_of(g3, "cba")) ==
          relation_union(diagonal_relation(g3),
                         pairs(g3, {{2, 1}, {2, 0}, {1, 0}})));
    const EnumSet all3 = all_enumerations(g3);
    for (const auto& pi : all3.members())
        CHECK(classify(toset_of(pi)).is_toset);

    EnumSet one(g3);
    one.insert(enum_of(g3, "bca"));
    CHECK(galois_enums_to_relation(one) == toset_of(enum_of(g3, "bca")));
    CHECK(galois_enums_to_relation(all3) == diagonal_relation(g3));
    CHECK(galois_enums_to_relation(EnumSet(g3)) == full_relation(g3));
}

TEST_CASE("linear extensions") {
    const Ground g = make_ground(3);
    CHECK(linear_extensions(diagonal_relation(g)) == all_enumerations(g));

    const Enumeration pi = enum_of(g, "bac");
    EnumSet just_pi(g);
    just_pi.insert(pi);
    CHECK(linear_extensions(toset_of(pi)) == just_pi);

    CHECK(linear_extensions(catalog::six_element_poset()).size() == 48);

    // a two-cycle admits no consonant total order
    CHECK(linear_extensions(pairs(g, {{0, 1}, {1, 0}})).empty());
}

TEST_CASE("poset-based enumeration sets") {
    const Ground g = make_ground(3);
    CHECK(is_poset_based(all_enumerations(g)));
    EnumSet ends(g);
    ends.insert(enum_of(g, "abc"));
    ends.insert(enum_of(g, "cba"));
    CHECK_FALSE(is_poset_based(ends));
    CHECK(is_poset_based(halfspace_set(g, 0, 1)));
}

TEST_CASE("Galois antitone pair") {
    // S subset of L(T) iff T subset of the Galois relation of S
    const Ground g = make_ground(3);
    const EnumSet all = all_enumerations(g);
    std::vector<Enumeration> order(all.members().begin(), all.members().end());
    for (unsigned code = 0; code < 64u; code += 3) {
        EnumSet s(g);
        for (std::size_t i = 0; i < order.size(); ++i)
            if ((code >> i) & 1u)
                s.insert(order[i]);
        for (unsigned rc = 0; rc < 64u; rc += 5) {
            Relation t = diagonal_relation(g);
            std::size_t i = 0;
            for (int u = 0; u < 3; ++u)
                for (int v = 0; v < 3; ++v) {
                    if (u == v)
                        continue;
                    if ((rc >> i) & 1u)
                        t.add(u, v);
                    ++i;
                }
            const bool left = s.subset_of(linear_extensions(t));
            const bool right = t.subset_of(galois_enums_to_relation(s));
            CHECK(left == right);
        }
    }
}

TEST_CASE("contraction normal form") {
    const Ground g2 = make_ground(2);
    const Relation t = preposet_closure(pairs(g2, {{0, 1}}));
    CHECK(is_contraction(t, t));
    CHECK(is_contraction(t, full_relation(g2)));
    CHECK_FALSE(is_contraction(diagonal_relation(g2), t));
    CHECK_THROWS_AS(is_contraction(pairs(g2, {{0, 1}}), t), error);
}

TEST_CASE("Hasse diagrams") {
    const Ground g = make_ground(3);
    const Relation chain = toset_of(enum_of(g, "abc"));
    CHECK(hasse(chain) == pairs(g, {{0, 1}, {1, 2}}));
    CHECK(hasse(diagonal_relation(g)) == Relation(g));
    CHECK(transitive_closure(relation_union(hasse(chain), diagonal_relation(g))) == chain);

    const Ground g6 = make_ground(6);
    Relation expected(g6);
    expected.add(0, 4);  // a -> e
    expected.add(0, 5);  // a -> f
    expected.add(1, 3);  // b -> d
    expected.add(1, 5);  // b -> f
    expected.add(2, 3);  // c -> d
    expected.add(2, 4);  // c -> e
    CHECK(hasse(catalog::six_element_poset()) == expected);

    CHECK_THROWS_AS(hasse(full_relation(g)), error);
}

TEST_CASE("poset dimension") {
    const Ground g = make_ground(3);
    CHECK(poset_dimension(toset_of(enum_of(g, "abc"))) == 1);
    const Ground g2 = make_ground(2);
    CHECK(poset_dimension(diagonal_relation(g2)) == 2);
    CHECK(poset_dimension(catalog::six_element_poset()) == 3);
    CHECK_THROWS_AS(poset_dimension(full_relation(g2)), error);
    CHECK_THROWS_AS(poset_dimension(diagonal_relation(make_ground(7))), guard_error);
}

TEST_CASE("height in the poset lattice") {
    const Ground g = make_ground(3);
    CHECK(height_of(all_enumerations(g)) == 3);
    EnumSet one(g);
    one.insert(enum_of(g, "abc"));
    CHECK(height_of(one) == 0);
    CHECK(height_of(EnumSet(g)) == -1);
    EnumSet ends(g);
    ends.insert(enum_of(g, "abc"));
    ends.insert(enum_of(g, "cba"));
    CHECK_THROWS_AS(height_of(ends), error);

    // height counts the incomparable pairs of the associated poset
    Relation t = preposet_closure(pairs(g, {{0, 1}}));
    CHECK(height_of(linear_extensions(t)) == 2);
}

TEST_CASE("poset and preposet counts") {
    CHECK(count_posets(1) == 1);
    CHECK(count_posets(2) == 3);
    CHECK(count_posets(3) == 19);
    CHECK(count_posets(4) == 219);
    CHECK(count_preposets(1) == 1);
    CHECK(count_preposets(2) == 4);
    CHECK(count_preposets(3) == 29);
    CHECK(count_preposets(4) == 355);
}

TEST_CASE("sandwich principle for nested strict orders") {
    // between strict orders G' strictly inside G there is a transitive
    // irreflexive G'' with |G \ G''| = 1, found by dropping a pair of G \ G'
    // that is maximal in G
    const Ground g = make_ground(4);
    detail::for_each_reflexive_relation(g, [&](const Relation& r) {
        if (!classify(r).is_poset)
            return;
        Relation strict = r;
        for (int u = 0; u < 4; ++u)
            strict.remove(u, u);
        if (strict.pair_count() == 0)
            return;
        const Relation empty(g);
        // G' = empty strict order; find the one-pair-smaller sandwich
        bool found = false;
        for (int u = 0; u < 4 && !found; ++u)
            for (int v = 0; v < 4 && !found; ++v) {
                if (!strict.has(u, v))
                    continue;
                Relation candidate = strict;
                candidate.remove(u, v);
                Relation closed = transitive_closure(candidate);
                if (closed == candidate && empty.subset_of(candidate))
                    found = true;
            }
        CHECK(found);
    });
}
