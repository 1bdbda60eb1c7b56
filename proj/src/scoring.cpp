#include "smae/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace smae {

ScoreMetric score_metric_from_string(const std::string& s) {
  if (s == "pagerank") return ScoreMetric::pagerank;
  if (s == "degree") return ScoreMetric::degree;
  if (s == "closeness") return ScoreMetric::closeness;
  if (s == "betweenness") return ScoreMetric::betweenness;
  if (s == "learnable") return ScoreMetric::learnable;
  throw DataError("unknown score metric: " + s);
}

std::string to_string(ScoreMetric m) {
  switch (m) {
    case ScoreMetric::pagerank: return "pagerank";
    case ScoreMetric::degree: return "degree";
    case ScoreMetric::closeness: return "closeness";
    case ScoreMetric::betweenness: return "betweenness";
    case ScoreMetric::learnable: return "learnable";
  }
  return "?";
}

ScoreVector pagerank_scores(const Graph& g, const PageRankOptions& opt) {
  const int n = g.node_count;
  const double e = opt.damping;
  if (!(e > 0.0 && e < 1.0)) throw NumericError("pagerank damping must lie in (0,1)");
  if (opt.tol <= 0.0) throw NumericError("pagerank tol must be > 0");
  std::vector<double> s(static_cast<size_t>(n), 1.0 / n);
  std::vector<double> next(static_cast<size_t>(n));
  bool converged = false;
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    double dangling = 0.0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 0) dangling += s[static_cast<size_t>(v)];
    const double base = (1.0 - e) / n + e * dangling / n;
    for (int v = 0; v < n; ++v) {
      double acc = 0.0;
      for (int u : g.neighbors(v)) acc += s[static_cast<size_t>(u)] / g.degree(u);
      next[static_cast<size_t>(v)] = base + e * acc;
    }
    double delta = 0.0;
    for (int v = 0; v < n; ++v) delta += std::abs(next[static_cast<size_t>(v)] - s[static_cast<size_t>(v)]);
    s.swap(next);
    if (!std::isfinite(delta)) throw NumericError("pagerank produced a non-finite intermediate");
    if (delta < opt.tol) {
      converged = true;
      break;
    }
  }
  return {std::move(s), ScoreMetric::pagerank, converged};
}

ScoreVector degree_scores(const Graph& g) {
  std::vector<double> s(static_cast<size_t>(g.node_count));
  for (int v = 0; v < g.node_count; ++v) s[static_cast<size_t>(v)] = g.degree(v);
  return {std::move(s), ScoreMetric::degree, true};
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(static_cast<size_t>(g.node_count), -1);
  std::deque<int> queue{src};
  dist[static_cast<size_t>(src)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v)) {
      if (dist[static_cast<size_t>(u)] < 0) {
        dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

ScoreVector closeness_scores(const Graph& g) {
  const int n = g.node_count;
  std::vector<double> s(static_cast<size_t>(n), 0.0);
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    int64_t reachable = 0, total = 0;
    for (int d : dist)
      if (d >= 0) {
        ++reachable;
        total += d;
      }
    if (reachable <= 1 || n == 1) continue;  // isolated node scores 0
    const double r = static_cast<double>(reachable);
    s[static_cast<size_t>(v)] = ((r - 1.0) / (n - 1.0)) * ((r - 1.0) / static_cast<double>(total));
  }
  return {std::move(s), ScoreMetric::closeness, true};
}

ScoreVector betweenness_scores(const Graph& g) {
  const int n = g.node_count;
  std::vector<double> bc(static_cast<size_t>(n), 0.0);
  std::vector<int> dist(static_cast<size_t>(n));
  std::vector<double> sigma(static_cast<size_t>(n));
  std::vector<double> delta(static_cast<size_t>(n));
  std::vector<std::vector<int>> preds(static_cast<size_t>(n));
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();
    dist[static_cast<size_t>(src)] = 0;
    sigma[static_cast<size_t>(src)] = 1.0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int u : g.neighbors(v)) {
        if (dist[static_cast<size_t>(u)] < 0) {
          dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(v)] + 1;
          queue.push_back(u);
        }
        if (dist[static_cast<size_t>(u)] == dist[static_cast<size_t>(v)] + 1) {
          sigma[static_cast<size_t>(u)] += sigma[static_cast<size_t>(v)];
          preds[static_cast<size_t>(u)].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int v : preds[static_cast<size_t>(w)])
        delta[static_cast<size_t>(v)] += sigma[static_cast<size_t>(v)] / sigma[static_cast<size_t>(w)] *
                                         (1.0 + delta[static_cast<size_t>(w)]);
      if (w != src) bc[static_cast<size_t>(w)] += delta[static_cast<size_t>(w)];
    }
  }
  // Each unordered pair was visited from both ends.
  for (double& x : bc) x *= 0.5;
  return {std::move(bc), ScoreMetric::betweenness, true};
}

ScoreVector predefined_scores(const Graph& g, ScoreMetric metric, const PageRankOptions& pr) {
  switch (metric) {
    case ScoreMetric::pagerank: return pagerank_scores(g, pr);
    case ScoreMetric::degree: return degree_scores(g);
    case ScoreMetric::closeness: return closeness_scores(g);
    case ScoreMetric::betweenness: return betweenness_scores(g);
    case ScoreMetric::learnable:
      throw DataError("learnable scoring has no predefined evaluation");
  }
  throw DataError("bad metric");
}

}  // namespace smae
