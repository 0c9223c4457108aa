#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "rexp/regexp.hpp"

namespace rexp {

struct GenConfig {
  std::uint64_t seed = 1234;
  int max_star_reps = 10;  // star repetitions are drawn from [0, max_star_reps]
};

// Deterministic RNG used for word generation.  Bounded draws use rejection
// sampling on the raw engine output so results do not depend on library
// internals of std::uniform_int_distribution.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

struct EmptyLanguageError : std::runtime_error {
  EmptyLanguageError() : std::runtime_error("cannot generate a word from an empty language") {}
};

// Draw one word from L(r).  Unions pick uniformly among alternatives with a
// nonempty language; stars draw a repetition count uniformly from
// [0, max_star_reps].  Throws EmptyLanguageError when L(r) is empty.
Word gen_regexp_word(const RegExp& r, const GenConfig& cfg, RandomSource& rng);

// n words drawn from a fresh RandomSource seeded with cfg.seed; n >= 1.
std::vector<Word> gen_many(const RegExp& r, int n, const GenConfig& cfg);

}  // namespace rexp
