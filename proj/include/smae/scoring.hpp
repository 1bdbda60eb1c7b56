#pragma once

#include <string>
#include <vector>

#include "smae/graph.hpp"

namespace smae {

enum class ScoreMetric { pagerank, degree, closeness, betweenness, learnable };

ScoreMetric score_metric_from_string(const std::string& s);
std::string to_string(ScoreMetric m);

/// Per-node structural importance scores. Masking consumes only the ranks
/// (plus uniform noise), so absolute scale is irrelevant downstream.
struct ScoreVector {
  std::vector<double> values;
  ScoreMetric metric = ScoreMetric::degree;
  bool converged = true;  // only meaningful for pagerank
};

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-10;
  int max_iter = 200;
};

/// Fixed point of s_i = (1-e)/n + e * sum_{j in N_i} s_j / deg(j), iterated
/// from the uniform vector until the L1 change drops below tol. Nodes of
/// degree zero redistribute their mass uniformly, so the result always sums
/// to one. `converged` is false when max_iter ran out first.
ScoreVector pagerank_scores(const Graph& g, const PageRankOptions& opt = {});

ScoreVector degree_scores(const Graph& g);

/// Wasserman-Faust closeness: ((r-1)/(n-1)) * ((r-1)/sum of BFS distances to
/// the reachable set), where r counts reachable nodes including the node
/// itself. Zero for isolated nodes. Well-defined on disconnected graphs.
ScoreVector closeness_scores(const Graph& g);

/// Unnormalized shortest-path betweenness, Brandes accumulation, each
/// unordered source-target pair counted once, endpoints excluded.
ScoreVector betweenness_scores(const Graph& g);

/// Dispatch over the four predefined metrics (learnable is not valid here).
ScoreVector predefined_scores(const Graph& g, ScoreMetric metric,
                              const PageRankOptions& pr = {});

/// BFS hop distances from src; -1 marks unreachable nodes.
std::vector<int> bfs_distances(const Graph& g, int src);

}  // namespace smae
