#include "mtp/tensor.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

namespace mtp {

int64_t shape_numel(const Shape& s) {
  int64_t n = 1;
  for (int64_t d : s) {
    check(d >= 0, "negative dimension in shape");
    n *= d;
  }
  return n;
}

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

TensorVal::TensorVal(Shape s, std::vector<float> d) : shape(std::move(s)), data(std::move(d)) {
  check(shape_numel(shape) == static_cast<int64_t>(data.size()),
        "tensor data length " + std::to_string(data.size()) + " does not match shape " + shape_str(shape));
}

TensorVal::TensorVal(Shape s, float fill) : shape(std::move(s)), data(shape_numel(shape), fill) {}

bool TensorVal::all_finite() const {
  for (float v : data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void TensorVal::require_finite(const std::string& what) const {
  if (!all_finite()) throw NumericalError("non-finite values in " + what);
}

TensorVal TensorVal::reshaped(Shape s) const {
  check(shape_numel(s) == numel(), "reshape " + shape_str(shape) + " -> " + shape_str(s) + " changes element count");
  TensorVal out;
  out.shape = std::move(s);
  out.data = data;
  return out;
}

TensorVal TensorVal::uniform(Shape s, float lo, float hi, RngStream rng) {
  TensorVal t(std::move(s));
  for (float& v : t.data) v = rng.uniform(lo, hi);
  return t;
}

TensorVal TensorVal::normal(Shape s, float mean, float stddev, RngStream rng) {
  TensorVal t(std::move(s));
  for (float& v : t.data) v = mean + stddev * rng.normal();
  return t;
}

bool bit_equal(const TensorVal& a, const TensorVal& b) {
  if (a.shape != b.shape) return false;
  if (a.data.empty()) return true;
  return std::memcmp(a.data.data(), b.data.data(), a.data.size() * sizeof(float)) == 0;
}

float max_abs_diff(const TensorVal& a, const TensorVal& b) {
  check(a.shape == b.shape, "max_abs_diff: shape mismatch");
  float m = 0.0f;
  for (size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::fabs(a.data[i] - b.data[i]));
  return m;
}

}  // namespace mtp
