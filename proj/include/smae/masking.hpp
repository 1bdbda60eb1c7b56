#pragma once

#include <string>
#include <vector>

#include "smae/rng.hpp"

namespace smae {

enum class MaskStrategy { easy_to_hard, top, middle, bottom, random };

MaskStrategy mask_strategy_from_string(const std::string& s);
std::string to_string(MaskStrategy s);

struct MaskSchedule {
  double mask_ratio = 0.5;     // p in (0,1)
  double beta = 0.0;           // extra priority for informative nodes, >= 0
  int total_epochs = 1;        // T >= 1
  double warmup_ratio = 0.0;   // fraction of epochs with K = 0 (pure random masking)
  MaskStrategy strategy = MaskStrategy::easy_to_hard;
  bool noise = true;           // false reproduces the no-noise ablation arm

  void validate() const;
};

/// Curriculum size K(t) = floor(p * n * sqrt(t_eff / span)) with the warm-up
/// prefix removed: t_eff = max(0, t - warmup*T), span = T - warmup*T. K is 0
/// through warm-up, nondecreasing in t, and reaches floor(p*n) at t = T.
int schedule_k(int t, const MaskSchedule& schedule, int n);

/// Indices of the K largest scores; ties are broken uniformly at random from
/// `tie_rng` so tied nodes are equally likely members. Returned sorted.
std::vector<int> informative_set(const std::vector<double>& scores, int k, RngStream& tie_rng);

/// gamma_i = eps_i + beta * [i in yset], with eps_i ~ U(0,1) i.i.d. when
/// noise is on and eps_i = 0 otherwise. The noise draw never depends on beta
/// or yset, so raising beta only raises member priorities.
std::vector<double> mask_priorities(int n, const std::vector<int>& yset, double beta, bool noise,
                                    RngStream& noise_rng);

/// Number of nodes masked per graph: ceil(p*n) clamped to [1, n-1].
int mask_count(double mask_ratio, int n);

struct MaskPlan {
  std::vector<int> masked;        // sorted
  std::vector<double> priorities; // gamma, length n
  std::vector<int> informative;   // the top-K set used this epoch, sorted
  int epoch = 0;
  int k_used = 0;
};

/// easy_to_hard / random: the mask_count(p, n) highest-priority nodes.
/// top / middle / bottom: static windows of the score ranking (gamma breaks
/// score ties only). Ties beyond that break by index, lowest first.
std::vector<int> select_mask(const std::vector<double>& gamma, const std::vector<double>& scores,
                             const MaskSchedule& schedule, int n);

/// Full per-(graph, epoch) masking decision. Tie-break and noise draws come
/// from separate streams so strategy variants that skip one draw do not
/// perturb the other.
MaskPlan build_mask_plan(const std::vector<double>& scores, const MaskSchedule& schedule,
                         int epoch, int n, RngStream tie_rng, RngStream noise_rng);

}  // namespace smae
