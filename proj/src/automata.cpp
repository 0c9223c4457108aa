#include "rexp/automata.hpp"

#include <algorithm>
#include <cassert>

namespace rexp {

Nfa::Nfa(std::vector<std::vector<Transition>> out, StateId start, StateId final_state)
    : out_(std::move(out)),
      start_(start),
      final_(final_state),
      cache_(std::make_shared<ClosureCache>()) {
  cache_->entries.resize(out_.size());
}

const std::vector<Nfa::Transition>& Nfa::transitions_from(StateId s) const {
  return out_.at(static_cast<std::size_t>(s));
}

int Nfa::transition_count() const {
  int n = 0;
  for (const auto& ts : out_) n += static_cast<int>(ts.size());
  return n;
}

const std::vector<StateId>& Nfa::closure_of(StateId s) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& slot = cache_->entries[static_cast<std::size_t>(s)];
  if (!slot) {
    // Depth-first reachability over epsilon transitions.
    std::vector<bool> seen(out_.size(), false);
    std::vector<StateId> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    std::vector<StateId> closure;
    while (!stack.empty()) {
      StateId cur = stack.back();
      stack.pop_back();
      closure.push_back(cur);
      for (const Transition& t : out_[static_cast<std::size_t>(cur)]) {
        if (!t.label && !seen[static_cast<std::size_t>(t.to)]) {
          seen[static_cast<std::size_t>(t.to)] = true;
          stack.push_back(t.to);
        }
      }
    }
    std::sort(closure.begin(), closure.end());
    slot = std::move(closure);
  }
  return *slot;
}

bool Nfa::accepts(const Word& w) const {
  std::vector<bool> current(out_.size(), false);
  for (StateId s : closure_of(start_)) current[static_cast<std::size_t>(s)] = true;

  for (Symbol sym : w) {
    std::vector<bool> next(out_.size(), false);
    for (std::size_t s = 0; s < current.size(); ++s) {
      if (!current[s]) continue;
      for (const Transition& t : out_[s]) {
        if (t.label && *t.label == sym) {
          for (StateId c : closure_of(t.to)) next[static_cast<std::size_t>(c)] = true;
        }
      }
    }
    current = std::move(next);
  }
  return current[static_cast<std::size_t>(final_)];
}

bool accepts(const Nfa& n, const Word& w) { return n.accepts(w); }

namespace {

// Builder that places sub-automata into one state array.
struct Builder {
  std::vector<std::vector<Nfa::Transition>> out;

  StateId fresh() {
    out.emplace_back();
    return static_cast<StateId>(out.size() - 1);
  }
  void edge(StateId from, std::optional<Symbol> label, StateId to) {
    out[static_cast<std::size_t>(from)].push_back({label, to});
  }

  struct Piece {
    StateId start;
    StateId final;
  };

  Piece build(const RegExp& r) {
    switch (r.kind()) {
      case RegExpKind::Null: {
        StateId s = fresh(), f = fresh();
        return {s, f};
      }
      case RegExpKind::Empty: {
        StateId s = fresh(), f = fresh();
        edge(s, std::nullopt, f);
        return {s, f};
      }
      case RegExpKind::Singleton: {
        StateId s = fresh(), f = fresh();
        edge(s, singleton_a(r), f);
        return {s, f};
      }
      case RegExpKind::Union: {
        Piece a = build(union_r1(r));
        Piece b = build(union_r2(r));
        StateId s = fresh(), f = fresh();
        edge(s, std::nullopt, a.start);
        edge(s, std::nullopt, b.start);
        edge(a.final, std::nullopt, f);
        edge(b.final, std::nullopt, f);
        return {s, f};
      }
      case RegExpKind::Concat: {
        // The two halves stay intact and are joined by a dedicated epsilon
        // transition; no states are fused.
        Piece a = build(concat_r1(r));
        Piece b = build(concat_r2(r));
        edge(a.final, std::nullopt, b.start);
        return {a.start, b.final};
      }
      case RegExpKind::KleeneStar: {
        Piece a = build(kleenestar_r1(r));
        StateId s = fresh(), f = fresh();
        edge(s, std::nullopt, a.start);
        edge(s, std::nullopt, f);
        edge(a.final, std::nullopt, f);
        edge(a.final, std::nullopt, a.start);
        return {s, f};
      }
    }
    assert(false && "unreachable regexp kind");
    return {0, 0};
  }
};

}  // namespace

Nfa to_nfa(const RegExp& r) {
  Builder b;
  Builder::Piece p = b.build(r);
  return Nfa(std::move(b.out), p.start, p.final);
}

// ---------------------------------------------------------------------------
// Brzozowski derivatives

namespace {

bool nullable(const RegExp& r) {
  switch (r.kind()) {
    case RegExpKind::Null: return false;
    case RegExpKind::Empty: return true;
    case RegExpKind::Singleton: return false;
    case RegExpKind::Union: return nullable(union_r1(r)) || nullable(union_r2(r));
    case RegExpKind::Concat: return nullable(concat_r1(r)) && nullable(concat_r2(r));
    case RegExpKind::KleeneStar: return true;
  }
  return false;
}

// Total structural order, used to canonicalize union alternatives.
bool regexp_less(const RegExp& a, const RegExp& b) {
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind());
  switch (a.kind()) {
    case RegExpKind::Null:
    case RegExpKind::Empty:
      return false;
    case RegExpKind::Singleton:
      return singleton_a(a) < singleton_a(b);
    case RegExpKind::Union:
      if (regexp_less(union_r1(a), union_r1(b))) return true;
      if (regexp_less(union_r1(b), union_r1(a))) return false;
      return regexp_less(union_r2(a), union_r2(b));
    case RegExpKind::Concat:
      if (regexp_less(concat_r1(a), concat_r1(b))) return true;
      if (regexp_less(concat_r1(b), concat_r1(a))) return false;
      return regexp_less(concat_r2(a), concat_r2(b));
    case RegExpKind::KleeneStar:
      return regexp_less(kleenestar_r1(a), kleenestar_r1(b));
  }
  return false;
}

void union_alternatives(const RegExp& r, std::vector<RegExp>& out) {
  if (is_union(r)) {
    union_alternatives(union_r1(r), out);
    union_alternatives(union_r2(r), out);
  } else if (!is_null(r)) {
    out.push_back(r);
  }
}

// Union modulo associativity, commutativity, idempotence, and the null
// identity.  Without all four, iterated derivatives of starred unions grow
// exponentially; with them the reachable set stays finite.
RegExp smart_union(const RegExp& a, const RegExp& b) {
  std::vector<RegExp> alts;
  union_alternatives(a, alts);
  union_alternatives(b, alts);
  if (alts.empty()) return make_null();
  std::sort(alts.begin(), alts.end(), regexp_less);
  alts.erase(std::unique(alts.begin(), alts.end(),
                         [](const RegExp& x, const RegExp& y) { return x == y; }),
             alts.end());
  RegExp acc = alts.back();
  for (auto it = std::next(alts.rbegin()); it != alts.rend(); ++it) {
    acc = make_union(*it, acc);
  }
  return acc;
}

RegExp smart_concat(const RegExp& a, const RegExp& b) {
  if (is_null(a) || is_null(b)) return make_null();
  if (is_empty(a)) return b;
  if (is_empty(b)) return a;
  return make_concat(a, b);
}

RegExp derivative(const RegExp& r, Symbol a) {
  switch (r.kind()) {
    case RegExpKind::Null:
    case RegExpKind::Empty:
      return make_null();
    case RegExpKind::Singleton:
      return singleton_a(r) == a ? make_empty() : make_null();
    case RegExpKind::Union:
      return smart_union(derivative(union_r1(r), a), derivative(union_r2(r), a));
    case RegExpKind::Concat: {
      RegExp r1 = concat_r1(r), r2 = concat_r2(r);
      RegExp head = smart_concat(derivative(r1, a), r2);
      if (nullable(r1)) return smart_union(head, derivative(r2, a));
      return head;
    }
    case RegExpKind::KleeneStar:
      return smart_concat(derivative(kleenestar_r1(r), a), r);
  }
  return make_null();
}

}  // namespace

bool matches_derivative(const RegExp& r, const Word& w) {
  RegExp cur = r;
  for (Symbol a : w) cur = derivative(cur, a);
  return nullable(cur);
}

bool is_empty_language(const RegExp& r) {
  switch (r.kind()) {
    case RegExpKind::Null: return true;
    case RegExpKind::Empty: return false;
    case RegExpKind::Singleton: return false;
    case RegExpKind::Union:
      return is_empty_language(union_r1(r)) && is_empty_language(union_r2(r));
    case RegExpKind::Concat:
      return is_empty_language(concat_r1(r)) || is_empty_language(concat_r2(r));
    case RegExpKind::KleeneStar: return false;  // always contains the empty word
  }
  return false;
}

}  // namespace rexp
