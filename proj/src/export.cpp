#include "mvcrys/export.hpp"

#include <sstream>
#include <stdexcept>

namespace mvcrys {

std::string weight_label(const RatVec& w) { return to_string(w); }

nlohmann::json crystal_to_json(const CrystalGraph& g) {
    nlohmann::json nodes = nlohmann::json::array(), edges = nlohmann::json::array();
    for (std::size_t v = 0; v < g.size(); ++v) {
        nlohmann::json weight = nlohmann::json::array();
        for (const auto& x : g.weight[v]) weight.push_back(to_string(x));
        nlohmann::json node{{"id", v}, {"weight", weight}, {"eps", g.eps[v]}, {"phi", g.phi[v]}};
        node["tuple"] = v < g.keys.size() ? nlohmann::json(g.keys[v]) : nlohmann::json::array();
        node["dim"] = v < g.dims.size() ? nlohmann::json(g.dims[v]) : nlohmann::json(nullptr);
        nodes.push_back(std::move(node));
        for (int c = 0; c < g.colors(); ++c)
            if (g.f[v][c] >= 0) edges.push_back({{"from", v}, {"to", g.f[v][c]}, {"color", c + 1}});
    }
    return {{"datum", g.datum->name()}, {"nodes", nodes}, {"edges", edges}};
}

std::string crystal_to_dot(const CrystalGraph& g, const std::string& name) {
    static const char* palette[] = {"red", "blue", "darkgreen", "orange"};
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  node [shape=box, fontname=monospace];\n";
    for (std::size_t v = 0; v < g.size(); ++v) os << "  n" << v << " [label=\"" << weight_label(g.weight[v]) << "\"];\n";
    for (std::size_t v = 0; v < g.size(); ++v)
        for (int c = 0; c < g.colors(); ++c)
            if (g.f[v][c] >= 0)
                os << "  n" << v << " -> n" << g.f[v][c] << " [label=\"" << c + 1 << "\", color=" << palette[c % 4]
                   << "];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json gallery_to_json(const Gallery& g) {
    nlohmann::json lambda = nlohmann::json::array();
    for (const auto& x : g.type->lambda) lambda.push_back(to_string(x));
    std::vector<int> folds(g.folds.begin(), g.folds.end());
    return {{"datum", g.type->datum->name()}, {"lambda", lambda}, {"word", g.type->word},
            {"delta0", g.delta0}, {"folds", folds}};
}

Gallery gallery_from_json(const TypePtr& t, const nlohmann::json& j) {
    if (j.at("word").get<Word>() != t->word) throw std::invalid_argument("gallery word does not match the type");
    std::vector<int> key{j.at("delta0").get<int>()};
    for (int f : j.at("folds").get<std::vector<int>>()) key.push_back(f);
    return gallery_from_key(t, key);
}

}  // namespace mvcrys
