#pragma once

// JSON encodings of the documented external interfaces. Rationals travel as
// canonical "p/q" strings with q > 0 and gcd(p,q) = 1.

#include <json.hpp>

#include "supmod/faces.hpp"

namespace supmod {

using json = nlohmann::json;

inline std::string rational_to_string(const Rat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline Rat rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (s.empty() || slash == 0 || slash == s.size() - 1)
            throw input_error("malformed rational: " + s);
        if (slash == std::string::npos)
            return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den <= 0)
            throw input_error("rational denominator must be positive: " + s);
        return Rat(num, den);
    } catch (const std::exception&) {
        throw input_error("malformed rational: " + s);
    }
}

inline json ground_to_json(const Ground& g) { return json(g->labels()); }

inline Ground ground_from_json(const json& j) {
    if (!j.is_array())
        throw input_error("ground set must be an array of labels");
    return make_ground(j.get<std::vector<std::string>>());
}

inline json enumeration_to_json(const Enumeration& pi) {
    json out = json::array();
    for (int e : pi.order())
        out.push_back(pi.ground()->label(e));
    return out;
}

inline Enumeration enumeration_from_json(const Ground& g, const json& j) {
    if (!j.is_array())
        throw input_error("enumeration must be an array of labels");
    return Enumeration::from_labels(g, j.get<std::vector<std::string>>());
}

// pair list without the diagonal, which the flag declares implied
inline json relation_to_json(const Relation& r) {
    json pairs = json::array();
    for (int u = 0; u < r.n(); ++u)
        for (int v = 0; v < r.n(); ++v)
            if (u != v && r.has(u, v))
                pairs.push_back({r.ground()->label(u), r.ground()->label(v)});
    return json{{"ground", ground_to_json(r.ground())},
                {"reflexive", true},
                {"pairs", pairs}};
}

inline Relation relation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ground") || !j.contains("pairs"))
        throw input_error("relation needs \"ground\" and \"pairs\"");
    if (!j.value("reflexive", false))
        throw input_error("relation serialization requires \"reflexive\": true");
    const Ground g = ground_from_json(j.at("ground"));
    Relation r = diagonal_relation(g);
    for (const auto& p : j.at("pairs")) {
        if (!p.is_array() || p.size() != 2)
            throw input_error("relation pair must be [u, v]");
        r.add(g->index(p.at(0).get<std::string>()), g->index(p.at(1).get<std::string>()));
    }
    return r;
}

// members sorted by (size, lexicographic label order)
inline json setsystem_to_json(const SetSystem& d) {
    std::vector<Mask> members(d.members().begin(), d.members().end());
    std::sort(members.begin(), members.end(), [&](Mask a, Mask b) {
        if (popcount(a) != popcount(b))
            return popcount(a) < popcount(b);
        return mask_labels(d.ground(), a) < mask_labels(d.ground(), b);
    });
    json out = json::array();
    for (Mask m : members)
        out.push_back(mask_labels(d.ground(), m));
    return out;
}

inline json rational_vector_to_json(const RationalVector& x) {
    json out = json::object();
    for (int i = 0; i < x.n(); ++i)
        out[x.ground()->label(i)] = rational_to_string(x.at(i));
    return out;
}

inline json game_to_json(const Game& g) {
    std::vector<Mask> order;
    for (Mask s = 0; s <= full_mask(g.n()); ++s)
        order.push_back(s);
    std::sort(order.begin(), order.end(), [&](Mask a, Mask b) {
        if (popcount(a) != popcount(b))
            return popcount(a) < popcount(b);
        return mask_labels(g.ground(), a) < mask_labels(g.ground(), b);
    });
    json values = json::array();
    for (Mask s : order)
        values.push_back({{"set", mask_labels(g.ground(), s)},
                          {"value", rational_to_string(g.at(s))}});
    return json{{"ground", ground_to_json(g.ground())}, {"values", values}};
}

inline Game game_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ground") || !j.contains("values"))
        throw input_error("game needs \"ground\" and \"values\"");
    const Ground g = ground_from_json(j.at("ground"));
    const std::size_t size = std::size_t{1} << g->n();
    std::vector<Rat> values(size);
    std::vector<bool> seen(size, false);
    for (const auto& entry : j.at("values")) {
        if (!entry.is_object() || !entry.contains("set") || !entry.contains("value"))
            throw input_error("game entry needs \"set\" and \"value\"");
        Mask s = 0;
        for (const auto& l : entry.at("set"))
            s |= bit(g->index(l.get<std::string>()));
        if (seen[s])
            throw input_error("duplicate game entry for " + mask_to_string(g, s));
        seen[s] = true;
        values[s] = rational_from_string(entry.at("value").get<std::string>());
    }
    for (Mask s = 0; s < size; ++s)
        if (!seen[s])
            throw input_error("missing game entry for " + mask_to_string(g, static_cast<Mask>(s)));
    if (values[0] != 0)
        throw input_error("game value at the empty set must be 0");
    return Game(g, std::move(values));
}

inline json triplet_to_json(const Ground& g, const ElementaryTriplet& t) {
    return json{{"a", g->label(t.a)},
                {"b", g->label(t.b)},
                {"C", mask_labels(g, t.c)}};
}

inline json bundle_to_json(const FaceDescriptorBundle& b) {
    json en_part = json::array();
    for (const auto& block : b.en_part) {
        json arr = json::array();
        for (const auto& pi : block.members())
            arr.push_back(enumeration_to_json(pi));
        en_part.push_back(arr);
    }
    json fan_pos = json::array();
    for (const auto& r : b.fan_pos)
        fan_pos.push_back(relation_to_json(r));
    json ti_str = json::array();
    for (const auto& d : b.ti_str)
        ti_str.push_back(setsystem_to_json(d));
    json in_str = json::array();
    for (const auto& t : b.in_str)
        in_str.push_back(triplet_to_json(b.ground, t));
    json per_sg = json::array();
    for (const auto& [pi, rho] : b.per_sg_edges)
        per_sg.push_back({enumeration_to_json(pi), enumeration_to_json(rho)});
    return json{{"ground", ground_to_json(b.ground)},
                {"en_part", en_part},
                {"fan_pos", fan_pos},
                {"ti_str", ti_str},
                {"in_str", in_str},
                {"per_sg", per_sg}};
}

inline json report_to_json(const FaceReport& r) {
    return json{{"ii", r.ii},   {"iii", r.iii}, {"iv", r.iv},     {"v", r.v},
                {"vi", r.vi},   {"vii", r.vii}, {"viii", r.viii}, {"ix", r.ix},
                {"agreement", r.agreement}};
}

// DOT rendering of the tight-edge subgraph of a game
inline std::string per_sg_dot(const Game& g) {
    const FaceDescriptorBundle b = descriptors(g);
    std::ostringstream out;
    out << "graph per_sg {\n";
    const EnumSet all = all_enumerations(g.ground());
    for (const auto& pi : all.members())
        out << "  \"" << pi.to_string() << "\";\n";
    for (const auto& [pi, rho] : b.per_sg_edges) {
        const auto label = adjacency_label(pi, rho);
        out << "  \"" << pi.to_string() << "\" -- \"" << rho.to_string()
            << "\" [label=\"{" << g.ground()->label(label->u) << ","
            << g.ground()->label(label->v) << "}\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace supmod
