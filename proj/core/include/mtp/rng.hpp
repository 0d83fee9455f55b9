#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace mtp {

// Counter-based random stream. Each draw is a pure function of
// (seed, stream id, counter), so independent streams never share state and
// any consumer can be replayed in isolation.
class RngStream {
 public:
  RngStream() : key_(0), counter_(0) {}
  RngStream(uint64_t seed, uint64_t stream) : key_(mix(seed ^ mix(stream))), counter_(0) {}

  // Derive a child stream; does not advance this stream.
  RngStream child(uint64_t salt) const { return RngStream(key_, mix(salt ^ 0x9e3779b97f4a7c15ull)); }
  RngStream child(std::string_view name) const { return child(hash(name)); }

  uint64_t next_u64() { return mix(key_ ^ mix(counter_++ + 0x632be59bd9b4e019ull)); }

  uint32_t next_u32() { return static_cast<uint32_t>(next_u64() >> 32); }

  // Uniform in [0, 1).
  float next_float() { return static_cast<float>(next_u64() >> 40) * 0x1.0p-24f; }

  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  float uniform(float lo, float hi) { return lo + (hi - lo) * next_float(); }

  // Uniform integer in [0, n).
  uint64_t next_below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  // Standard normal via Box-Muller.
  float normal() {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 < 1e-300) u1 = 1e-300;
    return static_cast<float>(std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2));
  }

  static uint64_t hash(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  static uint64_t mix(uint64_t x) {  // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  uint64_t key_;
  uint64_t counter_;
};

}  // namespace mtp
