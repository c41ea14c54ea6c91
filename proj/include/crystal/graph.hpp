#pragma once

#include <algorithm>
#include <deque>
#include <map>

#include "crystal/format.hpp"
#include "crystal/slinf.hpp"

namespace crystal {

enum class CrystalKind { SLE, SLINF };

struct GraphEdge {
    int from = 0;
    int to = 0;
    int label = 0;   // residue i (SLE) or row index k (SLINF)
    int content = 0; // SLINF: content of the added box, theta_k + 1 - k at the tail

    friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct CrystalGraph {
    CrystalKind kind = CrystalKind::SLINF;
    int e = 2;
    Charge charge;
    int cap = 0;
    std::vector<std::vector<Partition>> vertices; // canonically sorted
    std::vector<GraphEdge> edges;                 // sorted

    ChargedMultipartition vertex(int i) const {
        return ChargedMultipartition(vertices[static_cast<std::size_t>(i)], charge, e);
    }
};

/// BFS closure of `start` under both edge directions, truncated at rank > cap.
/// Vertices are deduplicated on their component tuple (the charge is fixed),
/// and the result is sorted so that two runs serialize identically.
inline CrystalGraph build_component(const ChargedMultipartition& start, CrystalKind kind,
                                    int cap) {
    if (cap < start.rank())
        throw std::invalid_argument("rank cap below the rank of the start vertex");
    using Key = std::vector<Partition>;
    std::map<Key, int> ids;
    std::vector<Key> keys;
    std::map<Key, Partition> thetas; // SLINF only, derived along the edges
    std::deque<Key> frontier;
    auto visit = [&](const ChargedMultipartition& cm, const Partition* theta) {
        Key key = cm.components();
        if (!ids.count(key)) {
            ids.emplace(key, static_cast<int>(keys.size()));
            keys.push_back(key);
            frontier.push_back(key);
            if (kind == CrystalKind::SLINF) thetas.emplace(key, theta ? *theta : Partition());
        }
        return key;
    };
    auto with_box = [](const Partition& theta, int k, int delta) {
        auto parts = theta.parts();
        parts.resize(static_cast<std::size_t>(std::max(theta.length(), k)), 0);
        parts[static_cast<std::size_t>(k - 1)] += delta;
        return Partition(std::move(parts));
    };
    std::set<std::tuple<int, int, int>> edge_set; // (from, to, label)
    if (kind == CrystalKind::SLINF) {
        Partition theta0 = theta_position(start).theta;
        visit(start, &theta0);
    } else {
        visit(start, nullptr);
    }
    while (!frontier.empty()) {
        Key key = frontier.front();
        frontier.pop_front();
        ChargedMultipartition cm(key, start.charge(), start.modulus());
        int from = ids[key];
        if (kind == CrystalKind::SLE) {
            for (int i = 0; i < cm.modulus(); ++i) {
                if (cm.rank() + 1 <= cap)
                    if (auto down = f_tilde(cm, i))
                        edge_set.emplace(from, ids[visit(*down, nullptr)], i);
                if (auto up = e_tilde(cm, i))
                    edge_set.emplace(ids[visit(*up, nullptr)], from, i);
            }
        } else {
            const Partition theta = thetas.at(key);
            if (cm.rank() + cm.modulus() <= cap)
                for (auto& [k, down] : outgoing_edges(cm, theta)) {
                    Partition grown = with_box(theta, k, +1);
                    edge_set.emplace(from, ids[visit(down, &grown)], k);
                }
            for (auto& [k, up] : incoming_edges(cm, theta)) {
                Partition shrunk = with_box(theta, k, -1);
                edge_set.emplace(ids[visit(up, &shrunk)], from, k);
            }
        }
    }

    // canonical vertex order
    std::vector<int> order(keys.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return keys[static_cast<std::size_t>(x)] < keys[static_cast<std::size_t>(y)]; });
    std::vector<int> rank_of(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank_of[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    CrystalGraph g;
    g.kind = kind;
    g.e = start.modulus();
    g.charge = start.charge();
    g.cap = cap;
    for (int old : order) g.vertices.push_back(keys[static_cast<std::size_t>(old)]);
    for (auto [from, to, label] : edge_set) {
        GraphEdge edge;
        edge.from = rank_of[static_cast<std::size_t>(from)];
        edge.to = rank_of[static_cast<std::size_t>(to)];
        edge.label = label;
        if (kind == CrystalKind::SLINF) {
            const Partition& theta = thetas.at(keys[static_cast<std::size_t>(from)]);
            edge.content = theta.part(label) + 1 - label;
        }
        g.edges.push_back(edge);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline std::string to_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    for (const auto& v : g.vertices) out << "  \"" << compact(v) << "\";\n";
    for (const auto& e : g.edges) {
        out << "  \"" << compact(g.vertices[static_cast<std::size_t>(e.from)]) << "\" -> \""
            << compact(g.vertices[static_cast<std::size_t>(e.to)]) << "\" [label=\"";
        if (g.kind == CrystalKind::SLE)
            out << "i=" << e.label;
        else
            out << "k=" << e.label << ",c=" << e.content;
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

inline nlohmann::json to_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["kind"] = g.kind == CrystalKind::SLE ? "sle" : "slinf";
    j["e"] = g.e;
    j["charge"] = g.charge;
    j["cap"] = g.cap;
    auto verts = nlohmann::json::array();
    for (const auto& v : g.vertices) {
        auto comps = nlohmann::json::array();
        for (const auto& c : v) comps.push_back(c.parts());
        verts.push_back(comps);
    }
    j["vertices"] = verts;
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges) {
        nlohmann::json je;
        je["from"] = e.from;
        je["to"] = e.to;
        if (g.kind == CrystalKind::SLE) {
            je["i"] = e.label;
        } else {
            je["k"] = e.label;
            je["content"] = e.content;
        }
        edges.push_back(je);
    }
    j["edges"] = edges;
    return j;
}

inline CrystalGraph graph_from_json(const nlohmann::json& j) {
    CrystalGraph g;
    g.kind = j.at("kind").get<std::string>() == "sle" ? CrystalKind::SLE : CrystalKind::SLINF;
    g.e = j.at("e").get<int>();
    g.charge = j.at("charge").get<Charge>();
    g.cap = j.at("cap").get<int>();
    for (const auto& v : j.at("vertices")) {
        std::vector<Partition> comps;
        for (const auto& c : v) comps.emplace_back(c.get<std::vector<int>>());
        g.vertices.push_back(std::move(comps));
    }
    for (const auto& je : j.at("edges")) {
        GraphEdge e;
        e.from = je.at("from").get<int>();
        e.to = je.at("to").get<int>();
        if (g.kind == CrystalKind::SLE) {
            e.label = je.at("i").get<int>();
        } else {
            e.label = je.at("k").get<int>();
            e.content = je.at("content").get<int>();
        }
        g.edges.push_back(e);
    }
    return g;
}

} // namespace crystal
