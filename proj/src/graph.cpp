#include "cocoon/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace cocoon {

SocialGraph::SocialGraph(std::int64_t n)
    : attributes(static_cast<std::size_t>(n)),
      states(static_cast<std::size_t>(n), NodeState::Unpublished),
      r_out(static_cast<std::size_t>(n)),
      r_in(static_cast<std::size_t>(n)),
      c_out(static_cast<std::size_t>(n)),
      c_in(static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("graph: node count must be >= 1");
}

static bool contains(const std::vector<NodeId>& v, NodeId x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

bool SocialGraph::has_r_edge(NodeId from, NodeId to) const {
    return contains(r_out[static_cast<std::size_t>(from)], to);
}

bool SocialGraph::has_c_edge(NodeId from, NodeId to) const {
    return contains(c_out[static_cast<std::size_t>(from)], to);
}

void SocialGraph::add_r_edge(NodeId from, NodeId to) {
    if (from == to) throw std::invalid_argument("relationship edge: self-loop");
    if (has_r_edge(from, to)) throw std::invalid_argument("relationship edge: duplicate ordered pair");
    r_out[static_cast<std::size_t>(from)].push_back(to);
    r_in[static_cast<std::size_t>(to)].push_back(from);
}

bool SocialGraph::add_comment_edge(NodeId commenter, NodeId parent) {
    if (commenter == parent) throw std::invalid_argument("comment edge: self-comment");
    if (commenter < 0 || parent < 0 || commenter >= size() || parent >= size())
        throw std::invalid_argument("comment edge: node id out of range");
    if (has_c_edge(commenter, parent)) return false;
    c_out[static_cast<std::size_t>(commenter)].push_back(parent);
    c_in[static_cast<std::size_t>(parent)].push_back(commenter);
    return true;
}

void SocialGraph::replace_r_edge(NodeId from, NodeId old_to, NodeId new_to) {
    auto& out = r_out[static_cast<std::size_t>(from)];
    auto it = std::find(out.begin(), out.end(), old_to);
    if (it == out.end()) throw std::invalid_argument("replace_r_edge: edge not present");
    if (from == new_to) throw std::invalid_argument("replace_r_edge: self-loop");
    if (has_r_edge(from, new_to)) throw std::invalid_argument("replace_r_edge: duplicate ordered pair");
    *it = new_to;
    auto& in_old = r_in[static_cast<std::size_t>(old_to)];
    in_old.erase(std::find(in_old.begin(), in_old.end(), from));
    r_in[static_cast<std::size_t>(new_to)].push_back(from);
}

std::int64_t SocialGraph::degree(NodeId node, EdgeLayer layer, DegreeDirection dir) const {
    const auto i = static_cast<std::size_t>(node);
    const auto& out = layer == EdgeLayer::Relationship ? r_out : c_out;
    const auto& in = layer == EdgeLayer::Relationship ? r_in : c_in;
    switch (dir) {
        case DegreeDirection::Out: return static_cast<std::int64_t>(out[i].size());
        case DegreeDirection::In: return static_cast<std::int64_t>(in[i].size());
        case DegreeDirection::Total:
            return static_cast<std::int64_t>(out[i].size() + in[i].size());
    }
    return 0;
}

std::int64_t SocialGraph::r_edge_count() const {
    std::int64_t total = 0;
    for (const auto& v : r_out) total += static_cast<std::int64_t>(v.size());
    return total;
}

std::int64_t SocialGraph::c_edge_count() const {
    std::int64_t total = 0;
    for (const auto& v : c_out) total += static_cast<std::int64_t>(v.size());
    return total;
}

void SocialGraph::relationship_neighbors(NodeId node, std::vector<NodeId>& result) const {
    const auto i = static_cast<std::size_t>(node);
    result.clear();
    result.insert(result.end(), r_out[i].begin(), r_out[i].end());
    result.insert(result.end(), r_in[i].begin(), r_in[i].end());
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
}

std::vector<std::pair<NodeId, NodeId>> SocialGraph::relationship_edges() const {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(r_edge_count()));
    for (NodeId u = 0; u < size(); ++u)
        for (NodeId v : r_out[static_cast<std::size_t>(u)]) edges.emplace_back(u, v);
    return edges;
}

// Redraw until the value falls strictly inside (lo, hi); keeps the density
// shape inside the interval instead of piling mass on the boundary.
static double sample_truncated_normal(double mean, double stddev, double lo, double hi,
                                      Rng& rng) {
    std::normal_distribution<double> dist(mean, stddev);
    for (;;) {
        const double x = dist(rng);
        if (x > lo && x < hi) return x;
    }
}

std::vector<NodeAttributes> sample_attributes(std::int64_t n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_attributes: n must be >= 1");
    std::vector<NodeAttributes> attrs(static_cast<std::size_t>(n));
    for (auto& a : attrs) {
        a.viewpoint = sample_truncated_normal(0.5, 0.25, 0.0, 1.0, rng);
        a.emotion = sample_truncated_normal(0.0, 1.0, -1.0, 1.0, rng);
        a.faith = sample_truncated_normal(0.5, 0.25, 0.0, 1.0, rng);
    }
    return attrs;
}

std::vector<NodeAttributes> sample_attributes(std::int64_t n, std::uint64_t seed) {
    Rng rng(seed);
    return sample_attributes(n, rng);
}

SocialGraph generate_ba(std::int64_t n, double target_mean_degree, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("generate_ba: n must be >= 3");
    if (target_mean_degree < 2.0)
        throw std::invalid_argument("generate_ba: target mean degree must be >= 2");
    if (target_mean_degree >= static_cast<double>(n))
        throw std::invalid_argument("generate_ba: target mean degree must be < n");

    Rng rng(seed);
    SocialGraph graph(n);

    const auto half = target_mean_degree / 2.0;
    const auto m_low = static_cast<std::int64_t>(std::floor(half));
    const double frac = half - static_cast<double>(m_low);
    // Seed clique of floor(k/2)+2 nodes: seed edges then offset the attachment
    // deficit so the expected realized mean degree lands on the target (exact
    // for even k, -O(1/n) for odd).
    const std::int64_t seed_size = std::min<std::int64_t>(n, m_low + 2);

    // Seed clique; direction low-id -> high-id is arbitrary and irrelevant to
    // the undirected diffusion view.
    for (NodeId i = 0; i < seed_size; ++i)
        for (NodeId j = i + 1; j < seed_size; ++j) graph.add_r_edge(i, j);

    // Sampling pool: every node appears once per unit of total degree, so a
    // uniform draw is degree-proportional.
    std::vector<NodeId> pool;
    pool.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m_low + 1) * 2);
    for (NodeId i = 0; i < seed_size; ++i)
        for (std::int64_t d = 0; d < seed_size - 1; ++d) pool.push_back(i);

    std::bernoulli_distribution extra(frac);
    std::unordered_set<NodeId> targets;
    for (NodeId v = static_cast<NodeId>(seed_size); v < n; ++v) {
        std::int64_t m = m_low + (frac > 0.0 && extra(rng) ? 1 : 0);
        m = std::min<std::int64_t>(m, v);  // cannot attach to more nodes than exist
        targets.clear();
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        while (static_cast<std::int64_t>(targets.size()) < m)
            targets.insert(pool[pick(rng)]);
        // Deterministic edge insertion order regardless of hash layout.
        std::vector<NodeId> chosen(targets.begin(), targets.end());
        std::sort(chosen.begin(), chosen.end());
        for (NodeId t : chosen) {
            graph.add_r_edge(v, t);
            pool.push_back(v);
            pool.push_back(t);
        }
    }

    graph.attributes = sample_attributes(n, rng);
    return graph;
}

SocialGraph generate_ws(std::int64_t n, std::int64_t ring_degree, double rewire_beta,
                        std::uint64_t seed) {
    if (ring_degree < 2 || ring_degree % 2 != 0)
        throw std::invalid_argument("generate_ws: ring degree must be even and >= 2");
    if (ring_degree >= n)
        throw std::invalid_argument("generate_ws: ring degree must be < n");
    if (rewire_beta < 0.0 || rewire_beta > 1.0)
        throw std::invalid_argument("generate_ws: rewire probability must be in [0,1]");

    Rng rng(seed);
    SocialGraph graph(n);

    for (NodeId i = 0; i < n; ++i)
        for (std::int64_t j = 1; j <= ring_degree / 2; ++j)
            graph.add_r_edge(i, static_cast<NodeId>((i + j) % n));

    // Rewire each lattice edge (i, i+j) to (i, w) with probability beta,
    // avoiding self-loops and pairs already linked in either direction.
    std::bernoulli_distribution rewire(rewire_beta);
    std::uniform_int_distribution<std::int64_t> any_node(0, n - 1);
    for (NodeId i = 0; i < n; ++i) {
        for (std::int64_t j = 1; j <= ring_degree / 2; ++j) {
            const auto old_to = static_cast<NodeId>((i + j) % n);
            if (!rewire(rng)) continue;
            if (graph.degree(i, EdgeLayer::Relationship, DegreeDirection::Total) >= n - 1)
                continue;  // saturated; nowhere to rewire
            NodeId w;
            do {
                w = static_cast<NodeId>(any_node(rng));
            } while (w == i || graph.has_r_edge(i, w) || graph.has_r_edge(w, i));
            graph.replace_r_edge(i, old_to, w);
        }
    }

    graph.attributes = sample_attributes(n, rng);
    return graph;
}

DegreeStats degree_stats(const SocialGraph& graph, EdgeLayer layer, DegreeDirection dir) {
    DegreeStats stats;
    const auto n = graph.size();
    std::int64_t total = 0;
    for (NodeId v = 0; v < n; ++v) {
        const auto d = graph.degree(v, layer, dir);
        total += d;
        stats.max_degree = std::max(stats.max_degree, d);
        ++stats.histogram[d];
    }
    stats.mean_degree = n > 0 ? static_cast<double>(total) / static_cast<double>(n) : 0.0;
    return stats;
}

}  // namespace cocoon
