#include <catch2/catch_amalgamated.hpp>

#include "supmod/catalog.hpp"
#include "supmod/permutograph.hpp"
#include "supmod/relations.hpp"

using namespace supmod;

namespace {

Enumeration enum_of(const Ground& g, const std::string& word) {
    std::vector<std::string> labels;
    for (char c : word)
        labels.push_back(std::string(1, c));
    return Enumeration::from_labels(g, labels);
}

}  // namespace

TEST_CASE("rank vectors") {
    const Ground g3 = make_ground(3);
    CHECK(rank_vector(enum_of(g3, "abc")).entries() == std::vector<Rat>{1, 2, 3});
    CHECK(rank_vector(enum_of(g3, "cba")).entries() == std::vector<Rat>{3, 2, 1});
    const Ground g1 = make_ground(1);
    CHECK(rank_vector(enum_of(g1, "a")).entries() == std::vector<Rat>{1});
}

TEST_CASE("adjacency labels") {
    const Ground g = make_ground(3);
    const auto p = adjacency_label(enum_of(g, "abc"), enum_of(g, "bac"));
    REQUIRE(p.has_value());
    CHECK(*p == LabelPair(0, 1));
    CHECK_FALSE(adjacency_label(enum_of(g, "abc"), enum_of(g, "abc")).has_value());
    CHECK_FALSE(adjacency_label(enum_of(g, "abc"), enum_of(g, "cba")).has_value());
    CHECK_FALSE(adjacency_label(enum_of(g, "abc"), enum_of(g, "bca")).has_value());
}

TEST_CASE("inversions between enumerations") {
    const Ground g = make_ground(3);
    CHECK(inversions_between(enum_of(g, "abc"), enum_of(g, "bac")) ==
          std::set<LabelPair>{LabelPair(0, 1)});
    CHECK(inversions_between(enum_of(g, "abc"), enum_of(g, "abc")).empty());
    CHECK(inversions_between(enum_of(g, "abc"), enum_of(g, "cba")) ==
          std::set<LabelPair>{LabelPair(0, 1), LabelPair(0, 2), LabelPair(1, 2)});
}

TEST_CASE("bfs distance equals inversion count") {
    const Ground g2 = make_ground(2);
    CHECK(bfs_distance(enum_of(g2, "ab"), enum_of(g2, "ab")) == 0);
    CHECK(bfs_distance(enum_of(g2, "ab"), enum_of(g2, "ba")) == 1);
    const Ground g3 = make_ground(3);
    CHECK(bfs_distance(enum_of(g3, "abc"), enum_of(g3, "cba")) == 3);

    const EnumSet all = all_enumerations(g3);
    for (const auto& pi : all.members())
        for (const auto& rho : all.members())
            CHECK(bfs_distance(pi, rho) ==
                  static_cast<int>(inversions_between(pi, rho).size()));
}

TEST_CASE("betweenness predicate") {
    const Ground g = make_ground(3);
    const Enumeration abc = enum_of(g, "abc");
    CHECK(is_between(abc, abc, abc));
    CHECK(is_between(abc, abc, enum_of(g, "bac")));
    CHECK(is_between(abc, enum_of(g, "bac"), enum_of(g, "bca")));
    // sigma between pi and rho iff the two inversion sets are disjoint,
    // iff distances add up
    const EnumSet all = all_enumerations(g);
    for (const auto& pi : all.members())
        for (const auto& sigma : all.members())
            for (const auto& rho : all.members()) {
                const bool additive = bfs_distance(pi, sigma) + bfs_distance(sigma, rho) ==
                                      bfs_distance(pi, rho);
                CHECK(is_between(pi, sigma, rho) == additive);
            }
}

TEST_CASE("geodetic convexity basics") {
    const Ground g = make_ground(3);
    CHECK(is_geodetically_convex(all_enumerations(g)));
    EnumSet singleton(g);
    singleton.insert(enum_of(g, "abc"));
    CHECK(is_geodetically_convex(singleton));
    CHECK(is_geodetically_convex(EnumSet(g)));
    EnumSet ends(g);
    ends.insert(enum_of(g, "abc"));
    ends.insert(enum_of(g, "cba"));
    CHECK_FALSE(is_geodetically_convex(ends));
}

TEST_CASE("geodesics carry distinct labels covering the inversion set") {
    // every geodesic between pi and rho uses each label at most once and the
    // set of used labels is exactly Inv[pi, rho]
    for (int n : {3, 4}) {
        const Ground g = make_ground(n);
        const EnumSet all = all_enumerations(g);
        for (const auto& pi : all.members())
            for (const auto& rho : all.members()) {
                const auto target = inversions_between(pi, rho);
                // walk greedily along between-nodes, collecting labels
                Enumeration cur = pi;
                std::set<LabelPair> used;
                while (cur != rho) {
                    bool stepped = false;
                    for (int i = 0; i + 1 < cur.n() && !stepped; ++i) {
                        Enumeration next = cur.swap_positions(i);
                        if (is_between(pi, next, rho) &&
                            inversions_between(next, rho).size() <
                                inversions_between(cur, rho).size()) {
                            const auto label = adjacency_label(cur, next);
                            REQUIRE(label.has_value());
                            CHECK(used.count(*label) == 0);
                            used.insert(*label);
                            cur = next;
                            stepped = true;
                        }
                    }
                    REQUIRE(stepped);
                }
                CHECK(used == target);
            }
    }
}

TEST_CASE("inversions in a set") {
    const Ground g3 = make_ground(3);
    EnumSet singleton(g3);
    singleton.insert(enum_of(g3, "abc"));
    CHECK(inversions_in_set(singleton).empty());

    const Ground g2 = make_ground(2);
    CHECK(inversions_in_set(all_enumerations(g2)) == std::set<LabelPair>{LabelPair(0, 1)});

    const EnumSet six = linear_extensions(catalog::six_element_poset());
    CHECK(inversions_in_set(six).size() == 9);

    CHECK_THROWS_AS(inversions_in_set(EnumSet(g3)), error);
}

TEST_CASE("covering of a set") {
    const Ground g = make_ground(3);
    CHECK(covering_of_set(all_enumerations(g)) == Relation(g));

    const Ground g2 = make_ground(2);
    EnumSet ab(g2);
    ab.insert(enum_of(g2, "ab"));
    Relation expected(g2);
    expected.add(0, 1);
    CHECK(covering_of_set(ab) == expected);

    // boundary arrows of L(T) are the Hasse arrows of T
    Relation t = diagonal_relation(g);
    t.add(0, 1);
    const Relation closed = preposet_closure(t);
    Relation hasse_arrows(g);
    hasse_arrows.add(0, 1);
    CHECK(covering_of_set(linear_extensions(closed)) == hasse_arrows);
}

TEST_CASE("halfspace sets") {
    const Ground g2 = make_ground(2);
    EnumSet only_ab(g2);
    only_ab.insert(enum_of(g2, "ab"));
    CHECK(halfspace_set(g2, 0, 1) == only_ab);

    const Ground g3 = make_ground(3);
    CHECK(halfspace_set(g3, 0, 1).size() == 3);
    EnumSet both(g3);
    const EnumSet ab_first = halfspace_set(g3, 0, 1);
    const EnumSet ba_first = halfspace_set(g3, 1, 0);
    for (const auto& pi : ab_first.members())
        both.insert(pi);
    for (const auto& pi : ba_first.members())
        both.insert(pi);
    CHECK(both == all_enumerations(g3));

    CHECK_THROWS_AS(halfspace_set(g3, 1, 1), error);
}

TEST_CASE("transpose action") {
    const Ground g = make_ground(3);
    const EnumSet s = halfspace_set(g, 0, 1);
    const LabelPair p(0, 1);
    CHECK(transpose_action(transpose_action(s, p), p) == s);
    CHECK(transpose_action(s, p) == halfspace_set(g, 1, 0));

    // the action is a graph automorphism: distances are preserved
    const EnumSet all = all_enumerations(g);
    EnumSet mapped(g);
    for (const auto& pi : all.members())
        mapped.insert(pi);
    const LabelPair q(1, 2);
    for (const auto& pi : all.members())
        for (const auto& rho : all.members()) {
            EnumSet pair(g);
            pair.insert(pi);
            pair.insert(rho);
            const EnumSet image = transpose_action(pair, q);
            auto it = image.members().begin();
            const Enumeration a = *it;
            const Enumeration b = image.size() == 2 ? *std::next(it) : a;
            CHECK(bfs_distance(pi, rho) == bfs_distance(a, b));
        }
}

TEST_CASE("closer set of an edge") {
    const Ground g2 = make_ground(2);
    EnumSet only_ab(g2);
    only_ab.insert(enum_of(g2, "ab"));
    CHECK(closer_set(enum_of(g2, "ab"), enum_of(g2, "ba")) == only_ab);

    const Ground g3 = make_ground(3);
    const Enumeration abc = enum_of(g3, "abc");
    const Enumeration bac = enum_of(g3, "bac");
    CHECK(closer_set(abc, bac) == halfspace_set(g3, 0, 1));

    // bipartition, and the name is justified: strictly smaller distance
    EnumSet both(g3);
    const EnumSet near_abc = closer_set(abc, bac);
    const EnumSet near_bac = closer_set(bac, abc);
    for (const auto& pi : near_abc.members()) {
        CHECK(bfs_distance(pi, abc) < bfs_distance(pi, bac));
        both.insert(pi);
    }
    for (const auto& pi : near_bac.members())
        both.insert(pi);
    CHECK(both == all_enumerations(g3));

    CHECK_THROWS_AS(closer_set(abc, enum_of(g3, "cba")), error);
}

TEST_CASE("convexity matches the Galois round trip at n = 3") {
    const Ground g = make_ground(3);
    const EnumSet all = all_enumerations(g);
    std::vector<Enumeration> order(all.members().begin(), all.members().end());
    int convex = 0;
    for (unsigned code = 0; code < 64u; ++code) {
        EnumSet s(g);
        for (std::size_t i = 0; i < order.size(); ++i)
            if ((code >> i) & 1u)
                s.insert(order[i]);
        const bool conv = is_geodetically_convex(s);
        CHECK(conv == is_poset_based(s));
        if (conv)
            ++convex;
    }
    CHECK(convex == 20);  // 19 posets plus the empty set
}

TEST_CASE("trichotomy on convex sets") {
    // for non-empty convex S: internal labels are the incomparable pairs and
    // boundary arrows are the Hasse arrows of the associated poset
    const Ground g = make_ground(4);
    Relation t = diagonal_relation(g);
    t.add(0, 1);
    t.add(2, 3);
    const Relation poset = preposet_closure(t);
    const EnumSet s = linear_extensions(poset);
    REQUIRE(is_geodetically_convex(s));

    const auto internal = inversions_in_set(s);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
            const bool incomparable = !poset.has(u, v) && !poset.has(v, u);
            CHECK(internal.count(LabelPair(u, v)) == (incomparable ? 1u : 0u));
        }
    CHECK(covering_of_set(s) == hasse(poset));
}

TEST_CASE("diameter versus internal inversions") {
    // diam(S) <= |Inv(S)| with equality for every poset at n = 3; the
    // six-element poset shows a strict gap
    const Ground g = make_ground(3);
    const EnumSet all = all_enumerations(g);
    std::vector<Enumeration> order(all.members().begin(), all.members().end());
    for (unsigned code = 1; code < 64u; ++code) {
        EnumSet s(g);
        for (std::size_t i = 0; i < order.size(); ++i)
            if ((code >> i) & 1u)
                s.insert(order[i]);
        if (!is_poset_based(s))
            continue;
        int diam = 0;
        for (const auto& pi : s.members())
            for (const auto& rho : s.members())
                diam = std::max(diam, bfs_distance(pi, rho));
        CHECK(diam == static_cast<int>(inversions_in_set(s).size()));
    }

    const EnumSet six = linear_extensions(catalog::six_element_poset());
    int diam = 0;
    for (const auto& pi : six.members())
        for (const auto& rho : six.members())
            diam = std::max(diam,
                            static_cast<int>(inversions_between(pi, rho).size()));
    CHECK(diam == 8);
    CHECK(inversions_in_set(six).size() == 9);
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(all_enumerations(make_ground(9)), guard_error);
}

TEST_CASE("dot export of the permutohedral graph") {
    const std::string dot = permutohedral_graph_dot(make_ground(2));
    CHECK(dot.find("\"|a|b|\"") != std::string::npos);
    CHECK(dot.find("{a,b}") != std::string::npos);
}
