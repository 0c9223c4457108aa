#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rexp/regexp.hpp"

namespace rexp {

using StateId = int;

// An epsilon-NFA in Thompson shape: a single start state, a single final
// state, no transitions out of the final state, and at most two outgoing
// transitions per state.
class Nfa {
 public:
  struct Transition {
    std::optional<Symbol> label;  // nullopt is an epsilon transition
    StateId to;
  };

  int num_states() const { return static_cast<int>(out_.size()); }
  StateId start_state() const { return start_; }
  StateId final_state() const { return final_; }
  const std::vector<Transition>& transitions_from(StateId s) const;
  int transition_count() const;

  // Subset simulation over epsilon closures.
  bool accepts(const Word& w) const;

 private:
  Nfa(std::vector<std::vector<Transition>> out, StateId start, StateId final_state);

  // Closure computation is lazy; the cache is shared between copies and
  // guarded so concurrent readers are safe.
  const std::vector<StateId>& closure_of(StateId s) const;

  std::vector<std::vector<Transition>> out_;
  StateId start_ = 0;
  StateId final_ = 0;

  struct ClosureCache {
    std::mutex mutex;
    std::vector<std::optional<std::vector<StateId>>> entries;
  };
  std::shared_ptr<ClosureCache> cache_;

  friend Nfa to_nfa(const RegExp& r);
};

// Thompson construction.  State counts are fixed by shape: null, empty and
// singleton regexps take 2 states, a union |r1|+|r2|+2, a concatenation
// |r1|+|r2| (joined by a dedicated epsilon transition), a star |r1|+2.
Nfa to_nfa(const RegExp& r);

bool accepts(const Nfa& n, const Word& w);

// Independent decision procedure via Brzozowski derivatives, used to
// cross-check the NFA route.
bool matches_derivative(const RegExp& r, const Word& w);

// Structural emptiness: L(r) == {} ?
bool is_empty_language(const RegExp& r);

}  // namespace rexp
