#include "hbef/rng.hpp"

#include <cmath>

namespace hbef {
namespace {

// SplitMix64 finalizer; full-avalanche 64-bit mixer.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t combine(std::uint64_t parent, std::uint64_t node) {
  return mix64(parent ^ mix64(node));
}

}  // namespace

double Rng::uniform() {
  // 53-bit mantissa; in [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * kPi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Vector Rng::normal_vector(Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = normal();
  return v;
}

Matrix Rng::normal_matrix(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = normal();
  return m;
}

std::uint64_t seed_tree(std::uint64_t master, std::string_view label) {
  return combine(master, fnv1a(label));
}

std::uint64_t seed_tree(std::uint64_t master, std::string_view label, std::uint64_t index) {
  return combine(seed_tree(master, label), mix64(index));
}

std::uint64_t seed_tree(std::uint64_t master, std::string_view label_a, std::uint64_t index_a,
                        std::string_view label_b, std::uint64_t index_b) {
  return combine(seed_tree(master, label_a, index_a), combine(fnv1a(label_b), mix64(index_b)));
}

}  // namespace hbef
