#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "markov/laurent.hpp"
#include "markov/mirror_tree.hpp"
#include "markov/squared_tree.hpp"

namespace markov {

using nlohmann::json;

/// {"min_exp": <int>, "coeffs": ["<decimal>", ...]}; coefficients travel as
/// decimal strings so arbitrary precision survives any JSON parser. Zero is
/// {"min_exp": 0, "coeffs": []}.
inline json poly_to_json(const LaurentPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return json{{"min_exp", p.is_zero() ? 0 : p.min_exp()}, {"coeffs", std::move(coeffs)}};
}

inline LaurentPoly poly_from_json(const json& j) {
    std::int64_t min_exp = j.at("min_exp").get<std::int64_t>();
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return LaurentPoly::from_coeffs(min_exp, std::move(coeffs));
}

inline json node_to_json(const SquaredTriple& t) {
    return json{{"path", t.path}, {"triple", {poly_to_json(t.x), poly_to_json(t.y), poly_to_json(t.z)}}};
}

inline json node_to_json(const MirrorTriple& t) {
    return json{{"path", t.path},
                {"sign", t.sign > 0 ? "+1" : "-1"},
                {"triple", {poly_to_json(t.a), poly_to_json(t.b), poly_to_json(t.c)}}};
}

/// Versioned tree document written node-by-node so deep trees never sit in
/// memory as one JSON value.
template <typename GenerateFn>
void save_tree_document(const std::string& file, const std::string& kind, int depth, GenerateFn&& generate_fn) {
    std::ofstream out(file);
    if (!out) throw MarkovError("cannot open " + file + " for writing");
    out << "{\"schema\": 1, \"kind\": \"" << kind << "\", \"depth\": " << depth << ", \"nodes\": [\n";
    bool first = true;
    generate_fn([&](const json& node) {
        if (!first) out << ",\n";
        first = false;
        out << node.dump();
    });
    out << "\n]}\n";
    if (!out) throw MarkovError("failed writing " + file);
}

inline void save_squared_tree(const std::string& file, int depth) {
    save_tree_document(file, "squared", depth, [&](auto&& emit) {
        generate(depth, [&](const SquaredTriple& t) { emit(node_to_json(t)); });
    });
}

inline void save_mirror_tree(const std::string& file, int depth) {
    save_tree_document(file, "mirror", depth, [&](auto&& emit) {
        generate_mirror(depth, [&](const MirrorTriple& t) { emit(node_to_json(t)); });
    });
}

struct LoadedTree {
    std::string kind;
    int depth = 0;
    std::vector<MirrorTriple> mirror_nodes;    // populated for kind == "mirror"
    std::vector<SquaredTriple> squared_nodes;  // populated for kind == "squared"
};

inline LoadedTree load_tree(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw MarkovError("cannot open " + file);
    json doc = json::parse(in);
    if (doc.at("schema").get<int>() != 1) throw MarkovError("unsupported schema in " + file);
    LoadedTree t;
    t.kind = doc.at("kind").get<std::string>();
    t.depth = doc.at("depth").get<int>();
    for (const auto& n : doc.at("nodes")) {
        const auto& tr = n.at("triple");
        if (t.kind == "mirror") {
            MirrorTriple m{poly_from_json(tr.at(0)), poly_from_json(tr.at(1)), poly_from_json(tr.at(2)),
                           n.at("sign").get<std::string>() == "+1" ? +1 : -1, n.at("path").get<std::string>()};
            t.mirror_nodes.push_back(std::move(m));
        } else if (t.kind == "squared") {
            SquaredTriple s{poly_from_json(tr.at(0)), poly_from_json(tr.at(1)), poly_from_json(tr.at(2)),
                            n.at("path").get<std::string>()};
            t.squared_nodes.push_back(std::move(s));
        } else {
            throw MarkovError("unknown tree kind: " + t.kind);
        }
    }
    return t;
}

/// A triple file is either a bare JSON array of three polynomials or an
/// object with a "triple" member.
inline std::array<LaurentPoly, 3> load_triple(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw MarkovError("cannot open " + file);
    json doc = json::parse(in);
    const json& tr = doc.is_array() ? doc : doc.at("triple");
    if (tr.size() != 3) throw MarkovError("triple file must hold exactly three polynomials");
    return {poly_from_json(tr.at(0)), poly_from_json(tr.at(1)), poly_from_json(tr.at(2))};
}

}  // namespace markov
