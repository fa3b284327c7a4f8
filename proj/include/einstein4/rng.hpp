#pragma once

#include <cstdint>

#include "einstein4/linalg.hpp"

namespace einstein4 {

// Deterministic generator (splitmix64 core). Seeded runs reproduce bit-for-bit
// across platforms, which the reporting layer relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();                      // [0, 1)
  double uniform(double a, double b);    // [a, b)
  double normal();                       // standard normal (Box-Muller)

  Vec3 normal_vec3();
  Vec4 normal_vec4();
  Vec3 unit_vec3();
  Mat3 symmetric3(double scale = 1.0);
  Mat3 trace_free_symmetric3(double scale = 1.0);
  Mat3 rotation3();
  Mat4 rotation4();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace einstein4
