#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "hbef/types.hpp"

namespace hbef {

// Deterministic random source. Normal deviates use an explicit Box-Muller
// transform instead of std::normal_distribution, whose output sequence is
// implementation-defined; trajectories replayed from a seed record must not
// depend on the standard library version.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // N(0, 1)

  Vector normal_vector(Index n);
  Matrix normal_matrix(Index rows, Index cols);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Deterministic, collision-resistant derivation of child seeds from a master
// seed and a label path. Stable across platforms (pure integer arithmetic);
// independent of call order.
std::uint64_t seed_tree(std::uint64_t master, std::string_view label);
std::uint64_t seed_tree(std::uint64_t master, std::string_view label, std::uint64_t index);
std::uint64_t seed_tree(std::uint64_t master, std::string_view label_a, std::uint64_t index_a,
                        std::string_view label_b, std::uint64_t index_b);

}  // namespace hbef
