#pragma once

// Bundled worked scenarios used by the CLI `examples` command and the test
// suite: a dimension-3 poset on six elements, two small three-player games,
// and a pair of distinct extreme polymatroid rank functions with matching
// lattices of flats.

#include "supmod/faces.hpp"

namespace supmod::catalog {

// poset on {a,...,f} whose Hasse diagram is the bipartite double cover
// pattern a->{e,f}, b->{d,f}, c->{d,e}; the smallest poset of dimension 3
inline Relation six_element_poset() {
    const Ground g = make_ground(6);
    Relation t = diagonal_relation(g);
    const auto arrow = [&](char from, char to) {
        t.add(g->index(std::string(1, from)), g->index(std::string(1, to)));
    };
    arrow('a', 'e');
    arrow('a', 'f');
    arrow('b', 'd');
    arrow('b', 'f');
    arrow('c', 'd');
    arrow('c', 'e');
    return preposet_closure(t);
}

// supermodular three-player game: 2 on the grand coalition, 1 on each pair
inline Game three_player_game() {
    const Ground g = make_ground(3);
    std::vector<Rat> v(8, Rat(0));
    for (Mask s = 0; s < 8; ++s)
        if (popcount(s) == 2)
            v[s] = 1;
    v[7] = 2;
    return Game(g, std::move(v));
}

// non-supermodular game whose tightness class at y = (1,1,1) fails to be
// closed under intersection
inline Game tightness_counterexample() {
    const Ground g = make_ground(3);
    const Mask a = bit(0), b = bit(1), c = bit(2);
    std::vector<Rat> v(8, Rat(0));
    v[a | b | c] = 3;
    v[a | c] = 2;
    v[b | c] = 2;
    v[a] = 1;
    v[b] = -1;
    return Game(g, std::move(v));
}

// two distinct polymatroid rank functions on five points spanning distinct
// extreme rays yet inducing the same lattice of flats
inline std::pair<Game, Game> flats_demo_pair() {
    const Ground g = make_ground(5);
    const Mask a = bit(0), b = bit(1), c = bit(2), d = bit(3), e = bit(4);
    std::vector<Rat> h(32);
    for (Mask s = 0; s < 32; ++s) {
        switch (popcount(s)) {
            case 0:
                h[s] = 0;
                break;
            case 1:
                h[s] = (s == a) ? 2 : 4;
                break;
            case 2:
                if (s == (a | b))
                    h[s] = 5;
                else if (s == (b | c))
                    h[s] = 8;
                else
                    h[s] = 6;
                break;
            case 3:
                if (s == (a | b | d) || s == (a | b | e) || s == (a | c | e) ||
                    s == (a | d | e))
                    h[s] = 7;
                else
                    h[s] = 8;
                break;
            default:
                h[s] = 8;
                break;
        }
    }
    std::vector<Rat> h2 = h;
    h2[a] = 3;
    return {Game(g, std::move(h)), Game(g, std::move(h2))};
}

}  // namespace supmod::catalog
