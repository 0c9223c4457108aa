#include "rexp/wordgen.hpp"

#include <limits>
#include <stdexcept>

#include "rexp/automata.hpp"

namespace rexp {

std::uint64_t RandomSource::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below(0)");
  // Rejection sampling keeps the draw unbiased for every bound.
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

namespace {

void gen_into(const RegExp& r, const GenConfig& cfg, RandomSource& rng, Word& out) {
  switch (r.kind()) {
    case RegExpKind::Null:
      throw EmptyLanguageError();
    case RegExpKind::Empty:
      return;
    case RegExpKind::Singleton:
      out.push_back(singleton_a(r));
      return;
    case RegExpKind::Union: {
      RegExp a = union_r1(r), b = union_r2(r);
      bool a_ok = !is_empty_language(a);
      bool b_ok = !is_empty_language(b);
      if (!a_ok && !b_ok) throw EmptyLanguageError();
      if (a_ok && b_ok) {
        // Uniform between the live alternatives.
        if (rng.next_below(2) == 0) {
          gen_into(a, cfg, rng, out);
        } else {
          gen_into(b, cfg, rng, out);
        }
      } else {
        gen_into(a_ok ? a : b, cfg, rng, out);
      }
      return;
    }
    case RegExpKind::Concat:
      gen_into(concat_r1(r), cfg, rng, out);
      gen_into(concat_r2(r), cfg, rng, out);
      return;
    case RegExpKind::KleeneStar: {
      RegExp body = kleenestar_r1(r);
      if (is_empty_language(body)) return;  // only the empty word remains
      std::uint64_t reps = rng.next_below(static_cast<std::uint64_t>(cfg.max_star_reps) + 1);
      for (std::uint64_t i = 0; i < reps; ++i) gen_into(body, cfg, rng, out);
      return;
    }
  }
}

}  // namespace

Word gen_regexp_word(const RegExp& r, const GenConfig& cfg, RandomSource& rng) {
  if (cfg.max_star_reps < 1) throw std::invalid_argument("max_star_reps must be >= 1");
  if (is_empty_language(r)) throw EmptyLanguageError();
  Word out;
  gen_into(r, cfg, rng, out);
  return out;
}

std::vector<Word> gen_many(const RegExp& r, int n, const GenConfig& cfg) {
  if (n < 1) throw std::invalid_argument("gen_many requires n >= 1");
  RandomSource rng(cfg.seed);
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(gen_regexp_word(r, cfg, rng));
  return out;
}

}  // namespace rexp
