#include "faultloc/gammoid.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "faultloc/errors.hpp"

namespace faultloc {

namespace {

// Unit-capacity flow network for Menger-style vertex-disjoint path packing.
// Every graph node v is split into v_in (2v) and v_out (2v+1) joined by a
// unit arc, so one unit of flow occupies the whole node.
class UnitFlowNetwork {
public:
    explicit UnitFlowNetwork(int vertex_count) : head_(vertex_count, -1) {}

    int add_arc(int from, int to) {
        arcs_.push_back({to, head_[from], 1});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
        return static_cast<int>(arcs_.size()) - 2;
    }

    // BFS augmenting paths; every augmentation adds one unit, so the loop
    // runs at most card(S) times.
    int max_flow(int source, int sink) {
        int total = 0;
        std::vector<int> parent_arc(head_.size());
        while (true) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            std::queue<int> frontier;
            frontier.push(source);
            parent_arc[source] = -2;
            while (!frontier.empty() && parent_arc[sink] == -1) {
                const int v = frontier.front();
                frontier.pop();
                for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                    if (arcs_[a].capacity > 0 && parent_arc[arcs_[a].to] == -1) {
                        parent_arc[arcs_[a].to] = a;
                        frontier.push(arcs_[a].to);
                    }
                }
            }
            if (parent_arc[sink] == -1) break;
            for (int v = sink; v != source;) {
                const int a = parent_arc[v];
                arcs_[a].capacity -= 1;
                arcs_[a ^ 1].capacity += 1;
                v = arcs_[a ^ 1].to;
            }
            ++total;
        }
        return total;
    }

    bool arc_saturated(int arc_id) const { return arcs_[arc_id].capacity == 0; }

private:
    struct Arc {
        int to;
        int next;
        int capacity;
    };
    std::vector<Arc> arcs_;
    std::vector<int> head_;
};

struct FlowSetup {
    UnitFlowNetwork network;
    int source;
    int sink;
    // arc ids for decoding: split arc per node, graph arcs per edge
    std::vector<int> split_arc;
    std::vector<int> edge_arc;
};

constexpr int node_in(int v) { return 2 * v; }
constexpr int node_out(int v) { return 2 * v + 1; }

FlowSetup build_network(const Gammoid& gammoid, const std::vector<int>& sources) {
    const int n = gammoid.graph.node_count();
    const int source = 2 * n;
    const int sink = 2 * n + 1;
    FlowSetup setup{UnitFlowNetwork(2 * n + 2), source, sink, {}, {}};
    setup.split_arc.resize(n);
    for (int v = 0; v < n; ++v)
        setup.split_arc[v] = setup.network.add_arc(node_in(v), node_out(v));
    setup.edge_arc.reserve(gammoid.graph.edges().size());
    for (const Edge& e : gammoid.graph.edges())
        setup.edge_arc.push_back(
            setup.network.add_arc(node_out(e.source), node_in(e.target)));
    for (int s : sources) setup.network.add_arc(source, node_in(s));
    for (int z : gammoid.output_set) setup.network.add_arc(node_out(z), sink);
    return setup;
}

void check_sources(const Gammoid& gammoid, const std::vector<int>& sources) {
    std::unordered_set<int> ground(gammoid.ground_set.begin(),
                                   gammoid.ground_set.end());
    std::unordered_set<int> seen;
    for (int s : sources) {
        gammoid.graph.check_node(s);
        if (!ground.count(s))
            throw InputError("node " + std::to_string(s) + " is not in the ground set");
        if (!seen.insert(s).second)
            throw InputError("duplicate node " + std::to_string(s) + " in input set");
    }
}

// Follow saturated unit arcs from each source; the disjoint paths are exactly
// the node sequences traced by the integral flow.
PathFamily decode_paths(const Gammoid& gammoid, const std::vector<int>& sources,
                        const FlowSetup& setup) {
    const int n = gammoid.graph.node_count();
    // saturated-edge successor of each node's out-half
    std::vector<int> successor(n, -1);
    const auto& edges = gammoid.graph.edges();
    for (size_t k = 0; k < edges.size(); ++k)
        if (setup.network.arc_saturated(setup.edge_arc[k]))
            successor[edges[k].source] = edges[k].target;
    std::unordered_set<int> outputs(gammoid.output_set.begin(),
                                    gammoid.output_set.end());
    PathFamily family;
    for (int s : sources) {
        std::vector<int> path{s};
        int v = s;
        // A node that is itself an output may still pass flow onward only if
        // its out->sink arc was not the saturated one; the successor map
        // already captures the edge actually used.
        while (!(outputs.count(v) && successor[v] == -1)) {
            v = successor[v];
            path.push_back(v);
        }
        family.paths.push_back(std::move(path));
    }
    return family;
}

} // namespace

LinkResult is_linked(const Gammoid& gammoid, const std::vector<int>& sources) {
    check_sources(gammoid, sources);
    if (sources.empty()) return {true, {}};
    FlowSetup setup = build_network(gammoid, sources);
    const int flow = setup.network.max_flow(setup.source, setup.sink);
    if (flow != static_cast<int>(sources.size())) return {false, {}};
    return {true, decode_paths(gammoid, sources, setup)};
}

int rank(const Gammoid& gammoid, const std::vector<int>& sources) {
    check_sources(gammoid, sources);
    if (sources.empty()) return 0;
    FlowSetup setup = build_network(gammoid, sources);
    return setup.network.max_flow(setup.source, setup.sink);
}

int nullity(const Gammoid& gammoid, const std::vector<int>& sources) {
    return static_cast<int>(sources.size()) - rank(gammoid, sources);
}

namespace {

// Colexicographic subset successor: advance `subset` (indices into the ground
// set, strictly increasing) to the next size-r subset; false when exhausted.
bool next_subset(std::vector<int>& subset, int universe) {
    const int r = static_cast<int>(subset.size());
    for (int i = 0; i < r; ++i) {
        const int ceiling = (i + 1 < r) ? subset[i + 1] : universe;
        if (subset[i] + 1 < ceiling) {
            ++subset[i];
            for (int j = 0; j < i; ++j) subset[j] = j;
            return true;
        }
    }
    return false;
}

} // namespace

SparkResult spark(const Gammoid& gammoid, std::optional<int> budget) {
    const int ground_size = static_cast<int>(gammoid.ground_set.size());
    const int output_size = static_cast<int>(gammoid.output_set.size());
    // No family of disjoint paths can exceed card(Z), so any subset of size
    // card(Z)+1 is dependent and enumeration stops there.
    const int ceiling = std::min(ground_size, output_size + 1);
    const int cap = std::min(ceiling, budget.value_or(ceiling));
    if (budget && *budget < 1) throw InputError("spark budget must be >= 1");

    for (int r = 1; r <= cap; ++r) {
        if (r == output_size + 1) {
            // Dependent by counting; report the colexicographically first set.
            SparkResult result;
            result.spark = r;
            for (int i = 0; i < r; ++i)
                result.circuit.push_back(gammoid.ground_set[i]);
            return result;
        }
        std::vector<int> subset(r);
        for (int i = 0; i < r; ++i) subset[i] = i;
        do {
            std::vector<int> candidate(r);
            for (int i = 0; i < r; ++i) candidate[i] = gammoid.ground_set[subset[i]];
            if (rank(gammoid, candidate) < r) {
                SparkResult result;
                result.spark = r;
                result.circuit = std::move(candidate);
                return result;
            }
        } while (next_subset(subset, ground_size));
    }

    if (cap < ceiling)
        throw BudgetExceeded("spark enumeration stopped at subset size " +
                                 std::to_string(cap) +
                                 "; all sets of that size or smaller are independent",
                             cap + 1);

    // Every subset of the ground set is independent (only possible when
    // card(L) <= card(Z)).
    SparkResult result;
    result.spark = ground_size + 1;
    result.all_independent = true;
    return result;
}

Gammoid transpose(const Gammoid& gammoid) {
    return Gammoid(gammoid.graph.transposed(), gammoid.output_set,
                   gammoid.ground_set);
}

std::vector<int> concatenation_second_node_map(const Gammoid& first,
                                               const Gammoid& second) {
    if (first.output_set.size() != second.ground_set.size())
        throw InputError("concatenation requires card(output of first) == "
                         "card(ground of second)");
    const int n1 = first.graph.node_count();
    const int n2 = second.graph.node_count();
    std::vector<int> map(n2, -1);
    for (size_t i = 0; i < second.ground_set.size(); ++i)
        map[second.ground_set[i]] = first.output_set[i];
    int next_id = n1;
    for (int v = 0; v < n2; ++v)
        if (map[v] == -1) map[v] = next_id++;
    return map;
}

Gammoid concatenate(const Gammoid& first, const Gammoid& second) {
    const std::vector<int> map = concatenation_second_node_map(first, second);
    const int n1 = first.graph.node_count();
    const int fused = static_cast<int>(second.ground_set.size());
    InfluenceGraph graph(n1 + second.graph.node_count() - fused);
    for (const Edge& e : first.graph.edges())
        graph.add_edge(e.source, e.target, e.weight);
    for (const Edge& e : second.graph.edges())
        graph.add_edge(map[e.source], map[e.target], e.weight);
    std::vector<int> output;
    output.reserve(second.output_set.size());
    for (int z : second.output_set) output.push_back(map[z]);
    return Gammoid(std::move(graph), first.ground_set, std::move(output));
}

bool verify_path_family(const Gammoid& gammoid, const std::vector<int>& sources,
                        const PathFamily& family) {
    if (family.paths.size() != sources.size()) return false;
    std::unordered_set<int> outputs(gammoid.output_set.begin(),
                                    gammoid.output_set.end());
    std::unordered_set<int> used;
    std::vector<int> starts;
    for (const auto& path : family.paths) {
        if (path.empty()) return false;
        for (size_t k = 1; k < path.size(); ++k)
            if (!gammoid.graph.has_edge(path[k - 1], path[k])) return false;
        for (int v : path)
            if (!used.insert(v).second) return false;
        if (!outputs.count(path.back())) return false;
        starts.push_back(path.front());
    }
    std::vector<int> sorted_sources = sources;
    std::sort(starts.begin(), starts.end());
    std::sort(sorted_sources.begin(), sorted_sources.end());
    return starts == sorted_sources;
}

} // namespace faultloc
