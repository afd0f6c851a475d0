// Node/edge data model for the two-layer social graph (directed relationship
// and comment layers), attribute sampling, and BA/WS topology generation.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace cocoon {

using NodeId = std::int32_t;
using Rng = std::mt19937_64;

enum class NodeState : std::uint8_t {
    Unpublished,  // S: has not spread the information
    Published     // I: has spread it; never reverts (SI semantics)
};

// Per-node scalar attributes. All three stay strictly inside their open
// intervals: p, f in (0,1), m in (-1,1).
struct NodeAttributes {
    double viewpoint = 0.5;  // p
    double emotion = 0.0;    // m
    double faith = 0.5;      // f
};

enum class EdgeLayer { Relationship, Comment };
enum class DegreeDirection { In, Out, Total };

struct DegreeStats {
    double mean_degree = 0.0;
    std::int64_t max_degree = 0;
    std::map<std::int64_t, std::int64_t> histogram;  // degree -> node count
};

// Two-layer directed graph over nodes 0..n-1. Neither layer allows
// self-loops or duplicate ordered pairs. The relationship layer stores the
// creation direction but information diffuses both ways along a tie; the
// comment layer entry u->v means u commented toward v's post.
struct SocialGraph {
    std::vector<NodeAttributes> attributes;
    std::vector<NodeState> states;
    std::vector<std::vector<NodeId>> r_out, r_in;  // relationship layer
    std::vector<std::vector<NodeId>> c_out, c_in;  // comment layer

    SocialGraph() = default;
    explicit SocialGraph(std::int64_t n);

    std::int64_t size() const { return static_cast<std::int64_t>(attributes.size()); }

    bool has_r_edge(NodeId from, NodeId to) const;
    bool has_c_edge(NodeId from, NodeId to) const;

    // Throws std::invalid_argument on self-loops or duplicate pairs.
    void add_r_edge(NodeId from, NodeId to);

    // Inserts commenter->parent if absent; returns whether an insertion
    // happened (repeated comments between the same ordered pair are not
    // considered). Self-comments are rejected with std::invalid_argument.
    bool add_comment_edge(NodeId commenter, NodeId parent);

    // Replaces relationship edge (from, old_to) with (from, new_to).
    void replace_r_edge(NodeId from, NodeId old_to, NodeId new_to);

    std::int64_t degree(NodeId node, EdgeLayer layer, DegreeDirection dir) const;
    std::int64_t r_edge_count() const;
    std::int64_t c_edge_count() const;

    // Undirected view of the relationship layer: out- and in-neighbors of
    // `node`, deduplicated, ascending. This is the substrate information
    // diffuses along.
    void relationship_neighbors(NodeId node, std::vector<NodeId>& result) const;

    // Flat snapshot of all relationship edges as ordered (from, to) pairs.
    std::vector<std::pair<NodeId, NodeId>> relationship_edges() const;
};

// Draws per-node attributes: p and f from a normal(1/2, 1/4) constrained to
// (0,1) by rejection, m from a standard normal constrained to (-1,1).
std::vector<NodeAttributes> sample_attributes(std::int64_t n, std::uint64_t seed);
std::vector<NodeAttributes> sample_attributes(std::int64_t n, Rng& rng);

// Barabasi-Albert preferential attachment. Seed clique on ceil(k/2)+1 nodes;
// each new node attaches to floor(k/2) or ceil(k/2) distinct existing nodes
// (Bernoulli on the fractional part), direction new->existing. Attributes
// sampled, all states Unpublished.
SocialGraph generate_ba(std::int64_t n, double target_mean_degree, std::uint64_t seed);

// Watts-Strogatz small world: ring lattice with `ring_degree` neighbors per
// node, each edge rewired with probability rewire_beta. Edge count is
// preserved exactly.
SocialGraph generate_ws(std::int64_t n, std::int64_t ring_degree, double rewire_beta,
                        std::uint64_t seed);

DegreeStats degree_stats(const SocialGraph& graph, EdgeLayer layer, DegreeDirection dir);

}  // namespace cocoon
