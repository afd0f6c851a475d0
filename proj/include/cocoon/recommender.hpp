// Viewpoint-similarity candidate filtering under Recommendation Accuracy and
// relationship-edge rewiring.

#pragma once

#include <cstddef>
#include <span>

#include "cocoon/graph.hpp"

namespace cocoon {

// Global recommendation accuracy. ra = 1 is the limit case where every
// filtered candidate set is empty.
struct RecommendationAccuracy {
    double value = 0.0;
    explicit RecommendationAccuracy(double v);
};

// floor(candidate_count * (1 - ra)); the epsilon guards against products of
// decimal-entered parameters rounding just below an exact integer.
std::size_t filtered_count(std::size_t candidate_count, RecommendationAccuracy ra);

// Ranks candidates by |p_anchor - p_candidate| ascending (ties by ascending
// id) and keeps the most-similar (1 - ra) fraction. With candidates = all
// nodes except the anchor this is the full recommendation list.
std::vector<NodeId> viewpoint_filter(const SocialGraph& graph, NodeId anchor,
                                     std::span<const NodeId> candidates,
                                     RecommendationAccuracy ra);

// One topology-update pass: each relationship edge (x, y) is independently
// rewired with probability lambda to (x, y_new), y_new drawn uniformly from
// the anchor's filtered recommendation list minus y, minus x's existing
// out-neighbors. Edges with an empty eligible set are left untouched.
// Preserves the edge count exactly. Returns the number of edges rewired.
std::int64_t rewire_step(SocialGraph& graph, double lambda, RecommendationAccuracy ra,
                         Rng& rng);
std::int64_t rewire_step(SocialGraph& graph, double lambda, RecommendationAccuracy ra,
                         std::uint64_t seed);

}  // namespace cocoon
