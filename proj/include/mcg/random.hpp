#pragma once

#include <cstdint>
#include <random>

#include "mcg/word.hpp"

namespace mcg {

/// Seeded generator with portable bounded draws (no std distributions, whose
/// output is implementation defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

/// Reduction of a uniformly random letter sequence of length 0..max_len.
inline Word random_word(Genus g, int max_len, Rng& rng) {
  const int len = rng.between(0, max_len);
  WordBuilder b(g);
  for (int i = 0; i < len; ++i) {
    const int slot = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.rank())));
    b.push(Letter::from_slot(slot, rng.below(2) ? +1 : -1));
  }
  return std::move(b).build();
}

}  // namespace mcg
