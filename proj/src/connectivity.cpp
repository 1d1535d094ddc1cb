#include "relay/connectivity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace relay {
namespace {

void check_radius(double R) {
    if (!(R > 0.0)) throw std::invalid_argument("communication radius must be positive");
}

TopologyGraph topology_from_nodes(std::vector<TopologyNode> nodes, double R) {
    TopologyGraph g;
    g.comm_radius = R;
    g.nodes = std::move(nodes);
    const double tol = geom_tol(R);
    const int count = static_cast<int>(g.nodes.size());
    for (int u = 0; u < count; ++u)
        for (int v = u + 1; v < count; ++v) {
            double d = distance(g.nodes[static_cast<std::size_t>(u)].p,
                                g.nodes[static_cast<std::size_t>(v)].p);
            if (d <= R + tol) g.edges.push_back(TopologyEdge{u, v, d});
        }
    return g;
}

} // namespace

TopologyGraph build_topology(std::span<const Point> relays, Point sink, double R) {
    check_radius(R);
    std::vector<TopologyNode> nodes;
    nodes.reserve(relays.size() + 1);
    for (Point p : relays) nodes.push_back(TopologyNode{p, NodeKind::Relay});
    nodes.push_back(TopologyNode{sink, NodeKind::Sink});
    return topology_from_nodes(std::move(nodes), R);
}

TopologyGraph build_topology(const std::vector<Relay>& relays, Point sink, double R) {
    check_radius(R);
    std::vector<TopologyNode> nodes;
    nodes.reserve(relays.size() + 1);
    for (const auto& rl : relays)
        nodes.push_back(TopologyNode{
            rl.position, rl.role == RelayRole::Cover ? NodeKind::Relay : NodeKind::Steiner});
    nodes.push_back(TopologyNode{sink, NodeKind::Sink});
    return topology_from_nodes(std::move(nodes), R);
}

std::vector<Point> mst_steinerize(std::span<const Point> relays, Point sink, double R) {
    check_radius(R);
    if (relays.empty()) return {};

    std::vector<Point> nodes(relays.begin(), relays.end());
    nodes.push_back(sink);
    const int m = static_cast<int>(nodes.size());

    // Prim from node 0; the (key, index) selection makes ties deterministic.
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> key(static_cast<std::size_t>(m), inf);
    std::vector<int> parent(static_cast<std::size_t>(m), -1);
    std::vector<char> done(static_cast<std::size_t>(m), 0);
    key[0] = 0.0;
    for (int round = 0; round < m; ++round) {
        int u = -1;
        for (int v = 0; v < m; ++v)
            if (!done[static_cast<std::size_t>(v)] &&
                (u < 0 || key[static_cast<std::size_t>(v)] < key[static_cast<std::size_t>(u)]))
                u = v;
        done[static_cast<std::size_t>(u)] = 1;
        for (int v = 0; v < m; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            double d = distance(nodes[static_cast<std::size_t>(u)],
                                nodes[static_cast<std::size_t>(v)]);
            if (d < key[static_cast<std::size_t>(v)]) {
                key[static_cast<std::size_t>(v)] = d;
                parent[static_cast<std::size_t>(v)] = u;
            }
        }
    }

    const double tol = geom_tol(R);
    std::vector<Point> added;
    for (int v = 1; v < m; ++v) {
        Point a = nodes[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        Point b = nodes[static_cast<std::size_t>(v)];
        double d = distance(a, b);
        if (d <= R + tol) continue;
        // ceil(d/R) - 1 points, guarded against d being an exact multiple of R.
        int count = static_cast<int>(std::ceil(d / R - 1e-12)) - 1;
        for (int k = 1; k <= count; ++k) {
            double t = static_cast<double>(k) / (count + 1);
            added.push_back(a + t * (b - a));
        }
    }
    return added;
}

bool is_connected(const TopologyGraph& graph) {
    const int count = static_cast<int>(graph.nodes.size());
    if (count == 0) return true;
    int sink = -1;
    for (int i = 0; i < count; ++i)
        if (graph.nodes[static_cast<std::size_t>(i)].kind == NodeKind::Sink) {
            sink = i;
            break;
        }
    if (sink < 0) throw std::invalid_argument("topology has no sink node");

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(count));
    for (const auto& e : graph.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<char> seen(static_cast<std::size_t>(count), 0);
    std::vector<int> stack{sink};
    seen[static_cast<std::size_t>(sink)] = 1;
    int visited = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++visited;
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
    }
    return visited == count;
}

} // namespace relay
