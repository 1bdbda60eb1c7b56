#include "smae/masking.hpp"

#include <algorithm>
#include <cmath>

#include "smae/util.hpp"

namespace smae {

MaskStrategy mask_strategy_from_string(const std::string& s) {
  if (s == "easy_to_hard") return MaskStrategy::easy_to_hard;
  if (s == "top") return MaskStrategy::top;
  if (s == "middle") return MaskStrategy::middle;
  if (s == "bottom") return MaskStrategy::bottom;
  if (s == "random") return MaskStrategy::random;
  throw DataError("unknown mask strategy: " + s);
}

std::string to_string(MaskStrategy s) {
  switch (s) {
    case MaskStrategy::easy_to_hard: return "easy_to_hard";
    case MaskStrategy::top: return "top";
    case MaskStrategy::middle: return "middle";
    case MaskStrategy::bottom: return "bottom";
    case MaskStrategy::random: return "random";
  }
  return "?";
}

void MaskSchedule::validate() const {
  if (!(mask_ratio > 0.0 && mask_ratio < 1.0))
    throw DataError("mask_ratio must lie in (0,1)");
  if (beta < 0.0) throw DataError("beta must be >= 0");
  if (total_epochs < 1) throw DataError("total_epochs must be >= 1");
  if (warmup_ratio < 0.0 || warmup_ratio > 1.0)
    throw DataError("warmup_ratio must lie in [0,1]");
}

int schedule_k(int t, const MaskSchedule& schedule, int n) {
  const int T = schedule.total_epochs;
  if (t < 0 || t > T)
    throw DataError("epoch " + std::to_string(t) + " outside [0," + std::to_string(T) + "]");
  const double warm = schedule.warmup_ratio * T;
  const double span = T - warm;
  const double cap = schedule.mask_ratio * n;
  if (span <= 0.0) return t >= T ? static_cast<int>(std::floor(cap)) : 0;
  const double t_eff = std::max(0.0, static_cast<double>(t) - warm);
  return static_cast<int>(std::floor(cap * std::sqrt(std::min(1.0, t_eff / span))));
}

std::vector<int> informative_set(const std::vector<double>& scores, int k, RngStream& tie_rng) {
  const int n = static_cast<int>(scores.size());
  if (k < 0 || k > n) throw DataError("informative set size outside [0,n]");
  // One tiebreak key per node, drawn in index order for determinism.
  std::vector<double> tiebreak(scores.size());
  for (auto& u : tiebreak) u = tie_rng.next_uniform();
  std::vector<int> idx(scores.size());
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (scores[static_cast<size_t>(a)] != scores[static_cast<size_t>(b)])
      return scores[static_cast<size_t>(a)] > scores[static_cast<size_t>(b)];
    if (tiebreak[static_cast<size_t>(a)] != tiebreak[static_cast<size_t>(b)])
      return tiebreak[static_cast<size_t>(a)] < tiebreak[static_cast<size_t>(b)];
    return a < b;
  });
  std::vector<int> result(idx.begin(), idx.begin() + k);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<double> mask_priorities(int n, const std::vector<int>& yset, double beta, bool noise,
                                    RngStream& noise_rng) {
  std::vector<double> gamma(static_cast<size_t>(n), 0.0);
  if (noise)
    for (auto& g : gamma) g = noise_rng.next_uniform();
  for (int i : yset) {
    if (i < 0 || i >= n) throw DataError("informative index out of range");
    gamma[static_cast<size_t>(i)] += beta;
  }
  return gamma;
}

int mask_count(double mask_ratio, int n) {
  int m = static_cast<int>(std::ceil(mask_ratio * n));
  return std::clamp(m, 1, n - 1);
}

namespace {

// Indices sorted by key descending, index ascending on exact ties.
std::vector<int> rank_desc(const std::vector<double>& key) {
  std::vector<int> idx(key.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return key[static_cast<size_t>(a)] > key[static_cast<size_t>(b)];
  });
  return idx;
}

}  // namespace

std::vector<int> select_mask(const std::vector<double>& gamma, const std::vector<double>& scores,
                             const MaskSchedule& schedule, int n) {
  if (n < 2) throw DataError("masking needs at least 2 nodes");
  if (static_cast<int>(gamma.size()) != n) throw DataError("priority vector length mismatch");
  const int m = mask_count(schedule.mask_ratio, n);
  std::vector<int> picked;
  switch (schedule.strategy) {
    case MaskStrategy::easy_to_hard:
    case MaskStrategy::random: {
      auto order = rank_desc(gamma);
      picked.assign(order.begin(), order.begin() + m);
      break;
    }
    case MaskStrategy::top:
    case MaskStrategy::middle:
    case MaskStrategy::bottom: {
      if (static_cast<int>(scores.size()) != n) throw DataError("score vector length mismatch");
      // Rank by score, gamma as tiebreak between equal scores.
      std::vector<int> idx(scores.size());
      for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (scores[static_cast<size_t>(a)] != scores[static_cast<size_t>(b)])
          return scores[static_cast<size_t>(a)] > scores[static_cast<size_t>(b)];
        if (gamma[static_cast<size_t>(a)] != gamma[static_cast<size_t>(b)])
          return gamma[static_cast<size_t>(a)] > gamma[static_cast<size_t>(b)];
        return a < b;
      });
      int start = 0;
      if (schedule.strategy == MaskStrategy::middle)
        start = (n - m) / 2;
      else if (schedule.strategy == MaskStrategy::bottom)
        start = n - m;
      picked.assign(idx.begin() + start, idx.begin() + start + m);
      break;
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

MaskPlan build_mask_plan(const std::vector<double>& scores, const MaskSchedule& schedule,
                         int epoch, int n, RngStream tie_rng, RngStream noise_rng) {
  schedule.validate();
  if (static_cast<int>(scores.size()) != n) throw DataError("score vector length mismatch");
  MaskPlan plan;
  plan.epoch = epoch;
  if (schedule.strategy == MaskStrategy::random) {
    // Random masking ignores scores entirely: gamma is the bare noise draw.
    plan.k_used = 0;
    plan.priorities = mask_priorities(n, {}, 0.0, schedule.noise, noise_rng);
  } else {
    plan.k_used = schedule_k(epoch, schedule, n);
    plan.informative = informative_set(scores, plan.k_used, tie_rng);
    plan.priorities = mask_priorities(n, plan.informative, schedule.beta, schedule.noise, noise_rng);
  }
  plan.masked = select_mask(plan.priorities, scores, schedule, n);
  return plan;
}

}  // namespace smae
