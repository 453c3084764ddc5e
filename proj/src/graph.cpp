#include "faultloc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "faultloc/errors.hpp"

namespace faultloc {

InfluenceGraph::InfluenceGraph(int node_count) : node_count_(node_count) {
    if (node_count < 0) throw InputError("node count must be non-negative");
    adjacency_.resize(node_count);
}

InfluenceGraph::InfluenceGraph(int node_count, std::vector<Edge> edges)
    : InfluenceGraph(node_count) {
    for (const Edge& e : edges) add_edge(e.source, e.target, e.weight);
}

void InfluenceGraph::check_node(int node) const {
    if (node < 0 || node >= node_count_)
        throw InputError("node id " + std::to_string(node) + " out of range [0, " +
                         std::to_string(node_count_) + ")");
}

void InfluenceGraph::add_edge(int source, int target, double weight) {
    check_node(source);
    check_node(target);
    if (has_edge(source, target))
        throw InputError("duplicate edge " + std::to_string(source) + "->" +
                         std::to_string(target));
    edges_.push_back({source, target, weight});
    adjacency_[source].emplace_back(target, weight);
}

bool InfluenceGraph::has_edge(int source, int target) const {
    check_node(source);
    check_node(target);
    const auto& row = adjacency_[source];
    return std::any_of(row.begin(), row.end(),
                       [target](const auto& p) { return p.first == target; });
}

double InfluenceGraph::edge_weight(int source, int target) const {
    check_node(source);
    check_node(target);
    for (const auto& [t, w] : adjacency_[source])
        if (t == target) return w;
    throw InputError("missing edge " + std::to_string(source) + "->" +
                     std::to_string(target));
}

const std::vector<std::pair<int, double>>& InfluenceGraph::out(int node) const {
    check_node(node);
    return adjacency_[node];
}

InfluenceGraph InfluenceGraph::transposed() const {
    InfluenceGraph flipped(node_count_);
    for (const Edge& e : edges_) flipped.add_edge(e.target, e.source, e.weight);
    return flipped;
}

double path_weight(const InfluenceGraph& graph, const std::vector<int>& path) {
    double product = 1.0;
    for (size_t k = 1; k < path.size(); ++k)
        product *= graph.edge_weight(path[k - 1], path[k]);
    return product;
}

double path_weight(const InfluenceGraph& graph,
                   const std::vector<std::vector<int>>& paths) {
    double sum = 0.0;
    for (const auto& path : paths) sum += path_weight(graph, path);
    return sum;
}

namespace {

void check_node_set(const InfluenceGraph& graph, const std::vector<int>& set,
                    const char* name) {
    std::unordered_set<int> seen;
    for (int node : set) {
        graph.check_node(node);
        if (!seen.insert(node).second)
            throw InputError(std::string(name) + " contains duplicate node id " +
                             std::to_string(node));
    }
}

} // namespace

Gammoid::Gammoid(InfluenceGraph g, std::vector<int> ground, std::vector<int> output)
    : graph(std::move(g)), ground_set(std::move(ground)), output_set(std::move(output)) {
    check_node_set(graph, ground_set, "ground set");
    check_node_set(graph, output_set, "output set");
}

Gammoid gammoid_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
    if (!j.contains("nodes")) throw InputError("graph JSON missing \"nodes\"");
    InfluenceGraph graph(j.at("nodes").get<int>());
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3)
            throw InputError("graph edge must be [src, dst] or [src, dst, weight]");
        const double w = e.size() == 3 ? e[2].get<double>() : 1.0;
        graph.add_edge(e[0].get<int>(), e[1].get<int>(), w);
    }
    return Gammoid(std::move(graph), j.value("ground_set", std::vector<int>{}),
                   j.value("output_set", std::vector<int>{}));
}

std::string gammoid_to_json(const Gammoid& gammoid) {
    nlohmann::json j;
    j["nodes"] = gammoid.graph.node_count();
    auto edges = nlohmann::json::array();
    for (const Edge& e : gammoid.graph.edges())
        edges.push_back({e.source, e.target, e.weight});
    j["edges"] = std::move(edges);
    j["ground_set"] = gammoid.ground_set;
    j["output_set"] = gammoid.output_set;
    return j.dump(2);
}

Gammoid load_gammoid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return gammoid_from_json(buffer.str());
}

void save_gammoid(const Gammoid& gammoid, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write graph file: " + path);
    out << gammoid_to_json(gammoid) << '\n';
}

} // namespace faultloc
