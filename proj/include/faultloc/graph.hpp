#pragma once

#include <string>
#include <vector>

namespace faultloc {

struct Edge {
    int source;
    int target;
    double weight = 1.0;
};

/// Weighted digraph of state interactions. For a linear system the weight of
/// edge j->i is the Jacobian entry df_i/dx_j. Self-loops are allowed
/// (diagonal Jacobian entries); duplicate (source, target) pairs are not.
class InfluenceGraph {
public:
    InfluenceGraph() = default;
    explicit InfluenceGraph(int node_count);
    InfluenceGraph(int node_count, std::vector<Edge> edges);

    int node_count() const { return node_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    void add_edge(int source, int target, double weight = 1.0);
    bool has_edge(int source, int target) const;
    double edge_weight(int source, int target) const;  // throws if absent

    /// Outgoing (target, weight) pairs of a node.
    const std::vector<std::pair<int, double>>& out(int node) const;

    /// Graph with every edge flipped, weights kept.
    InfluenceGraph transposed() const;

    void check_node(int node) const;  // throws InputError on bad id

private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, double>>> adjacency_;
};

/// Product of edge weights along a node sequence. The empty and
/// single-node paths have weight 1.
double path_weight(const InfluenceGraph& graph, const std::vector<int>& path);

/// Sum of path weights over a set of paths.
double path_weight(const InfluenceGraph& graph,
                   const std::vector<std::vector<int>>& paths);

/// Triple (ground set L, graph g, output set Z). Orderings of L and Z are
/// fixed; Gramian and coherence indices refer to the L ordering.
struct Gammoid {
    InfluenceGraph graph;
    std::vector<int> ground_set;
    std::vector<int> output_set;

    Gammoid() = default;
    Gammoid(InfluenceGraph g, std::vector<int> ground, std::vector<int> output);
};

/// Family of mutually node-disjoint directed paths, one per source node.
struct PathFamily {
    std::vector<std::vector<int>> paths;
};

/// Graph JSON: {"nodes": N, "edges": [[src,dst,weight],...],
/// "ground_set": [...], "output_set": [...]}. Weight omitted => 1.0.
Gammoid gammoid_from_json(const std::string& text);
std::string gammoid_to_json(const Gammoid& gammoid);
Gammoid load_gammoid(const std::string& path);
void save_gammoid(const Gammoid& gammoid, const std::string& path);

} // namespace faultloc
