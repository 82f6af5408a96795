// Command-line front end: load or generate games, emit descriptor bundles,
// compare games, run the randomized equivalence harness, count lattices,
// enumerate extreme rays, inspect posets, replay the bundled worked
// scenarios, and export graphs.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input,
// 3 guard violation.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "supmod/catalog.hpp"
#include "supmod/counting.hpp"
#include "supmod/json_io.hpp"

namespace {

using namespace supmod;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw input_error(std::string("malformed JSON in ") + path + ": " + ex.what());
    }
    return j;
}

Game load_game(const std::string& path) { return game_from_json(load_json(path)); }

int cmd_convert(const std::string& game_path) {
    const Game g = load_game(game_path);
    if (!is_supermodular(g))
        throw input_error("convert needs a supermodular game");
    std::cout << bundle_to_json(descriptors(g)).dump(2) << "\n";
    return 0;
}

int cmd_compare(const std::string& game_path, const std::string& game_b_path) {
    const Game ga = load_game(game_path);
    const Game gb = load_game(game_b_path);
    if (!is_supermodular(ga) || !is_supermodular(gb))
        throw input_error("compare needs supermodular games");
    const FaceReport r = theorem_report(ga, gb);
    std::cout << report_to_json(r).dump(2) << "\n";
    return r.agreement ? 0 : 1;
}

int cmd_verify(int n, int trials, std::uint64_t seed) {
    if (n < 2 || n > 4)
        throw guard_error("verify is guarded to 2 <= n <= 4");
    SplitMix64 rng(seed);
    int disagreements = 0;
    for (int i = 0; i < trials; ++i) {
        RandomGameParams params;
        params.n = n;
        params.terms = 1 + static_cast<int>(rng.below(5));
        params.max_coeff = 3;
        const Game ga = random_supermodular(rng.next(), params);
        const Game gb = random_supermodular(rng.next(), params);
        if (!theorem_report(ga, gb).agreement || !theorem_report(gb, ga).agreement)
            ++disagreements;
        if ((i + 1) % 50 == 0)
            std::cerr << "verify: " << (i + 1) << "/" << trials << " pairs\n";
    }
    std::cout << json{{"n", n}, {"trials", trials}, {"disagreements", disagreements}}.dump(2)
              << "\n";
    return disagreements == 0 ? 0 : 1;
}

int cmd_count(int n) {
    const LatticeCounts c = lattice_counts(n);
    std::cout << json{{"n", n},
                      {"posets", c.posets},
                      {"preposets", c.preposets},
                      {"topologies", c.topologies},
                      {"ordered_partitions", c.ordered_partitions}}
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_rays(int n, bool force) {
    const auto rays = extreme_rays(n, force);
    json arr = json::array();
    for (const auto& g : rays)
        arr.push_back(game_to_json(g));
    std::cout << json{{"n", n}, {"count", rays.size()}, {"rays", arr}}.dump(2) << "\n";
    return 0;
}

int cmd_poset(const std::string& relation_path) {
    const Relation t = relation_from_json(load_json(relation_path));
    if (!classify(t).is_poset)
        throw input_error("poset command needs a poset relation");
    const EnumSet l = linear_extensions(t);
    json extensions = json::array();
    for (const auto& pi : l.members())
        extensions.push_back(enumeration_to_json(pi));
    std::cout << json{{"extensions", extensions},
                      {"count", l.size()},
                      {"count_by_downsets", count_linear_extensions(t).str()},
                      {"dimension", poset_dimension(t)},
                      {"hasse", relation_to_json(hasse(t))}}
                     .dump(2)
              << "\n";
    return 0;
}

struct Check {
    std::string name;
    bool ok;
};

int cmd_examples() {
    std::vector<Check> checks;
    const auto push = [&](const std::string& name, bool ok) {
        checks.push_back({name, ok});
    };

    {
        const Game g = catalog::three_player_game();
        const Ground gr = g.ground();
        const Enumeration cba = Enumeration::from_labels(gr, {"c", "b", "a"});
        const Enumeration cab = Enumeration::from_labels(gr, {"c", "a", "b"});
        const RationalVector expect(gr, {Rat(1), Rat(1), Rat(0)});
        push("three-player game: marginal vector of |c|b|a| is (1,1,0)",
             marginal_vector(g, cba) == expect);
        push("three-player game: |c|a|b| shares the same marginal vector",
             marginal_vector(g, cab) == expect);
    }
    {
        const Game g = catalog::tightness_counterexample();
        const Ground gr = g.ground();
        push("counterexample: delta(a,b|c) = -1",
             delta(g, ElementaryTriplet(0, 1, bit(2))) == -1);
        const SetSystem tight = tightness_class(g, RationalVector(gr, {Rat(1), Rat(1), Rat(1)}));
        SetSystem expect(gr, {0, bit(0), bit(0) | bit(2), bit(1) | bit(2), full_mask(3)});
        push("counterexample: tightness class at (1,1,1) is {{},a,ac,bc,abc}",
             tight == expect);
        push("counterexample: tightness class not closed under intersection",
             !is_topology(tight) && tight.has(bit(0) | bit(2)) && tight.has(bit(1) | bit(2)) &&
                 !tight.has(bit(2)));
    }
    {
        const Relation t = catalog::six_element_poset();
        const EnumSet l = linear_extensions(t);
        push("six-element poset: |L(T)| = 48", l.size() == 48);
        push("six-element poset: |Inv(S)| = 9", inversions_in_set(l).size() == 9);
        int diam = 0;
        for (const auto& pi : l.members())
            for (const auto& rho : l.members())
                diam = std::max(diam, static_cast<int>(inversions_between(pi, rho).size()));
        push("six-element poset: diam(S) = 8", diam == 8);
        push("six-element poset: dimension 3", poset_dimension(t) == 3);
    }
    {
        const auto [h, h2] = catalog::flats_demo_pair();
        push("flats pair: h != h'", h != h2);
        push("flats pair: both polymatroid", is_polymatroid(h) && is_polymatroid(h2));
        const Game hs = submodular_reflect(h);
        const Game hs2 = submodular_reflect(h2);
        push("flats pair: both extreme (after reflection)",
             is_extreme(hs) && is_extreme(hs2));
        bool same_equivalence = true;
        for (Mask s = 0; s <= full_mask(5); ++s)
            for (Mask t = 0; t <= full_mask(5); ++t)
                if ((flats_closure(h, s) == flats_closure(h, t)) !=
                    (flats_closure(h2, s) == flats_closure(h2, t)))
                    same_equivalence = false;
        push("flats pair: identical flats equivalence", same_equivalence);
    }

    bool all_ok = true;
    for (const auto& c : checks) {
        std::cout << (c.ok ? "PASS" : "FAIL") << "  " << c.name << "\n";
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}

int cmd_graph(int n, const std::string& game_path, const std::string& format) {
    if (format != "dot")
        throw input_error("graph supports --format dot only");
    if (!game_path.empty()) {
        const Game g = load_game(game_path);
        if (!is_supermodular(g))
            throw input_error("graph needs a supermodular game");
        std::cout << per_sg_dot(g);
    } else {
        std::cout << permutohedral_graph_dot(make_ground(n));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorics of supermodular games and faces of their cone"};
    app.require_subcommand(1);

    int n = 3;
    std::uint64_t seed = 0;
    int trials = 100;
    std::string game_path, game_b_path, relation_path;
    std::string format = "json";
    bool force = false;

    auto* convert = app.add_subcommand("convert", "print the face-descriptor bundle of a game");
    convert->add_option("--game", game_path)->required();

    auto* compare = app.add_subcommand("compare", "print the per-condition face report of two games");
    compare->add_option("--game", game_path)->required();
    compare->add_option("--game-b", game_b_path)->required();

    auto* verify = app.add_subcommand("verify", "randomized equivalence harness");
    verify->add_option("--n", n);
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);

    auto* count = app.add_subcommand("count", "poset/preposet/topology/ordered-partition counts");
    count->add_option("--n", n);

    auto* rays = app.add_subcommand("rays", "extreme rays of the standardized supermodular cone");
    rays->add_option("--n", n);
    rays->add_flag("--force", force, "allow the long n=5 run");

    auto* poset = app.add_subcommand("poset", "linear extensions, dimension, Hasse arrows");
    poset->add_option("--relation", relation_path)->required();

    app.add_subcommand("examples", "replay the bundled worked scenarios");

    auto* graph = app.add_subcommand("graph", "DOT export (tight-edge subgraph or full graph)");
    graph->add_option("--n", n);
    graph->add_option("--game", game_path);
    graph->add_option("--format", format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (convert->parsed())
            return cmd_convert(game_path);
        if (compare->parsed())
            return cmd_compare(game_path, game_b_path);
        if (verify->parsed())
            return cmd_verify(n, trials, seed);
        if (count->parsed())
            return cmd_count(n);
        if (rays->parsed())
            return cmd_rays(n, force);
        if (poset->parsed())
            return cmd_poset(relation_path);
        if (app.get_subcommand("examples")->parsed())
            return cmd_examples();
        if (graph->parsed())
            return cmd_graph(n, game_path, format);
    } catch (const supmod::guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const supmod::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
