#pragma once

#include "relay/geometry.hpp"
#include "relay/placement.hpp"

#include <span>
#include <vector>

namespace relay {

enum class NodeKind { Relay, Sink, Steiner };

struct TopologyNode {
    Point p;
    NodeKind kind = NodeKind::Relay;
};

struct TopologyEdge {
    int u = 0;
    int v = 0;
    double weight = 0.0;
};

// Unit-disk graph of the high tier: an edge joins every node pair within
// comm_radius (+tol). Exactly one Sink node.
struct TopologyGraph {
    std::vector<TopologyNode> nodes;
    std::vector<TopologyEdge> edges;
    double comm_radius = 0.0;
};

// Nodes are the relays in order, then the sink.
TopologyGraph build_topology(std::span<const Point> relays, Point sink, double R);

// Same graph over a placed deployment; Connectivity relays become Steiner nodes.
TopologyGraph build_topology(const std::vector<Relay>& relays, Point sink, double R);

// Euclidean MST over relays + sink (Prim, ties to the smaller node index),
// then ceil(d/R)-1 evenly spaced points on each MST edge longer than R. The
// topology over relays + sink + returned points is connected.
std::vector<Point> mst_steinerize(std::span<const Point> relays, Point sink, double R);

// True iff every node is reachable from the sink.
bool is_connected(const TopologyGraph& graph);

} // namespace relay
