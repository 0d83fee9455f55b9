#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtp/error.hpp"
#include "mtp/rng.hpp"

namespace mtp {

using Shape = std::vector<int64_t>;

int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

// Dense row-major float32 tensor. The value type everything else moves around.
struct TensorVal {
  Shape shape;
  std::vector<float> data;

  TensorVal() = default;
  explicit TensorVal(Shape s) : shape(std::move(s)), data(shape_numel(shape), 0.0f) {}
  TensorVal(Shape s, std::vector<float> d);
  TensorVal(Shape s, float fill);

  int64_t numel() const { return static_cast<int64_t>(data.size()); }
  int64_t rows() const { return shape.empty() ? 1 : shape[0]; }
  int64_t cols() const { return shape.empty() ? 1 : numel() / shape[0]; }

  float& at(int64_t i) { return data[static_cast<size_t>(i)]; }
  float at(int64_t i) const { return data[static_cast<size_t>(i)]; }

  bool same_shape(const TensorVal& o) const { return shape == o.shape; }
  bool all_finite() const;
  void require_finite(const std::string& what) const;

  TensorVal reshaped(Shape s) const;

  static TensorVal zeros(Shape s) { return TensorVal(std::move(s)); }
  static TensorVal full(Shape s, float v) { return TensorVal(std::move(s), v); }
  static TensorVal scalar(float v) { return TensorVal(Shape{1}, std::vector<float>{v}); }
  static TensorVal uniform(Shape s, float lo, float hi, RngStream rng);
  static TensorVal normal(Shape s, float mean, float stddev, RngStream rng);
};

bool bit_equal(const TensorVal& a, const TensorVal& b);
float max_abs_diff(const TensorVal& a, const TensorVal& b);

}  // namespace mtp
