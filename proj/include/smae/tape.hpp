#pragma once

#include <functional>
#include <vector>

#include "smae/graph.hpp"
#include "smae/tensor.hpp"

namespace smae {

struct Var {
  int32_t id = -1;
  bool valid() const { return id >= 0; }
};

/// Reverse-mode differentiation over an explicit op tape. One tape per
/// forward pass, confined to one thread. Ops are recorded in creation order,
/// which is already a topological order, so backward() is a reverse sweep.
///
/// Referenced Graph objects must outlive the tape.
class Tape {
 public:
  struct Options {
    bool round_to_f32 = false;  // emulate 32-bit storage by rounding op outputs
    bool check_finite = true;   // NaN/Inf in any op output throws NumericError
  };

  Tape() = default;
  explicit Tape(Options opt) : opt_(opt) {}

  Var leaf(Tensor value);

  const Tensor& value(Var v) const { return values_.at(static_cast<size_t>(v.id)); }
  /// Valid after backward(); zeros if the var does not influence the loss.
  const Tensor& grad(Var v) const { return grads_.at(static_cast<size_t>(v.id)); }

  // --- primitives -------------------------------------------------------
  Var matmul(Var a, Var b);              // [m,k] x [k,n] -> [m,n]
  Var add(Var a, Var b);                 // same shape
  Var add_rowvec(Var m, Var row);        // [r,c] + [c] broadcast over rows
  Var scale_const(Var a, double c);
  Var scale_by_scalar(Var a, Var s);     // s is a [1] tensor, gradient flows to both
  Var rowscale(Var x, Var s);            // row i of x times s[i]; s is [n]
  Var neighbor_sum(Var x, const Graph& g);     // out_i = sum_{j in N(i)} x_j
  Var normalized_adj(Var x, const Graph& g);   // D^-1/2 (A+I) D^-1/2 x
  Var relu(Var x);
  Var prelu(Var x, Var slope);           // slope is a [1] tensor
  Var sigmoid(Var x);
  Var batchnorm_train(Var x, Var scale, Var shift, Tensor& run_mean, Tensor& run_var,
                      double momentum, double eps);
  Var batchnorm_eval(Var x, Var scale, Var shift, const Tensor& run_mean, const Tensor& run_var,
                     double eps);
  Var replace_rows(Var x, std::vector<int> rows, Var token);  // rows get the token
  Var select_rows(Var x, std::vector<int> rows);
  Var reshape(Var x, std::vector<int64_t> new_shape);
  Var mean_all(Var x);   // -> [1]
  Var sum_all(Var x);    // -> [1]

  /// Scaled cosine error over rows: mean_i (1 - cos(pred_i, target_i))^gamma,
  /// cosine guarded by 1e-12 in the norm product. Zero target rows contribute
  /// 1^gamma and log a warning; an empty row set is an error.
  Var sce_loss(Var pred, Tensor target, double gamma);

  /// Seeds d(loss)/d(loss) = 1 and sweeps the tape in reverse. `loss` must be
  /// a [1] tensor.
  void backward(Var loss);

  size_t size() const { return values_.size(); }

 private:
  Var push(Tensor out, std::function<void(Tape&)> backward_fn);
  Tensor& grad_buf(Var v) { return grads_[static_cast<size_t>(v.id)]; }
  void finalize(Tensor& t) const;

  Options opt_;
  std::vector<Tensor> values_;
  std::vector<Tensor> grads_;
  std::vector<std::function<void(Tape&)>> backward_fns_;  // empty fn for leaves
};

}  // namespace smae
