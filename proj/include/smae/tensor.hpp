#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace smae {

/// Dense row-major tensor of 64-bit reals. Training and verification run in
/// doubles; checkpoints quantize to 32-bit on disk.
struct Tensor {
  std::vector<int64_t> shape;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::vector<int64_t> s, std::vector<double> d) : shape(std::move(s)), data(std::move(d)) {
    assert(numel() == static_cast<int64_t>(data.size()));
  }

  static Tensor zeros(std::vector<int64_t> s) {
    int64_t n = 1;
    for (int64_t d : s) n *= d;
    return Tensor(std::move(s), std::vector<double>(static_cast<size_t>(n), 0.0));
  }
  static Tensor full(std::vector<int64_t> s, double v) {
    Tensor t = zeros(std::move(s));
    for (double& x : t.data) x = v;
    return t;
  }
  static Tensor scalar(double v) { return Tensor({1}, {v}); }
  static Tensor vector(std::vector<double> v) {
    auto n = static_cast<int64_t>(v.size());
    return Tensor({n}, std::move(v));
  }
  static Tensor matrix(int64_t r, int64_t c, std::vector<double> v) {
    return Tensor({r, c}, std::move(v));
  }

  int64_t numel() const {
    int64_t n = 1;
    for (int64_t d : shape) n *= d;
    return n;
  }
  int64_t ndim() const { return static_cast<int64_t>(shape.size()); }
  int64_t rows() const {
    assert(ndim() == 2);
    return shape[0];
  }
  int64_t cols() const {
    assert(ndim() == 2);
    return shape[1];
  }

  double& at(int64_t i, int64_t j) { return data[static_cast<size_t>(i * cols() + j)]; }
  double at(int64_t i, int64_t j) const { return data[static_cast<size_t>(i * cols() + j)]; }
  double& operator[](int64_t i) { return data[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data[static_cast<size_t>(i)]; }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  bool all_finite() const {
    for (double x : data)
      if (!std::isfinite(x)) return false;
    return true;
  }
};

}  // namespace smae
