#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rexp/dsl.hpp"

namespace rexp::dsl {

// ---------------------------------------------------------------------------
// RegexpEnv

RegexpEnv::RegexpEnv(std::map<std::string, RegExp> defs) : defs_(std::move(defs)) {}

const RegExp* RegexpEnv::find(const std::string& name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

const Nfa& RegexpEnv::nfa_for(const std::string& name) const {
  auto cached = nfas_.find(name);
  if (cached != nfas_.end()) return cached->second;
  auto it = defs_.find(name);
  if (it == defs_.end()) {
    throw std::logic_error("nfa_for: unbound regexp name: " + name);
  }
  return nfas_.emplace(name, to_nfa(it->second)).first->second;
}

// ---------------------------------------------------------------------------
// Predicate evaluation

namespace {

struct PredRuntimeError {
  std::string message;
};

// Runtime value inside a predicate: boolean, integer, symbol, or word.
using PV = std::variant<bool, std::int64_t, std::string, Word>;

std::string pv_rendering(const PV& v) {
  if (const auto* n = std::get_if<std::int64_t>(&v)) return std::to_string(*n);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* w = std::get_if<Word>(&v)) return render_word(*w);
  return std::get<bool>(v) ? "#t" : "#f";
}

class PredEval {
 public:
  PredEval(const Word& w, const RegexpEnv& env) : word_(w), env_(env) {}

  PV eval(const PredExpr& e) {
    switch (e.op) {
      case PredOp::WordVar:
        return word_;
      case PredOp::SymbolLit:
        return e.text;
      case PredOp::IntLit:
        return e.number;
      case PredOp::And: {
        for (const PredExpr& a : e.args) {
          if (!as_bool(a)) return false;
        }
        return true;
      }
      case PredOp::Or: {
        for (const PredExpr& a : e.args) {
          if (as_bool(a)) return true;
        }
        return false;
      }
      case PredOp::Not:
        return !as_bool(e.args[0]);
      case PredOp::EqQ: {
        PV lhs = eval(e.args[0]);
        PV rhs = eval(e.args[1]);
        if (lhs.index() != rhs.index()) return false;  // symbol vs integer
        return lhs == rhs;
      }
      case PredOp::NumEq:
        return as_int(e.args[0]) == as_int(e.args[1]);
      case PredOp::Lt:
        return as_int(e.args[0]) < as_int(e.args[1]);
      case PredOp::Le:
        return as_int(e.args[0]) <= as_int(e.args[1]);
      case PredOp::Gt:
        return as_int(e.args[0]) > as_int(e.args[1]);
      case PredOp::Ge:
        return as_int(e.args[0]) >= as_int(e.args[1]);
      case PredOp::OddQ:
        return as_int(e.args[0]) % 2 != 0;
      case PredOp::EvenQ:
        return as_int(e.args[0]) % 2 == 0;
      case PredOp::EmptyQ:
        return as_word(e.args[0]).empty();
      case PredOp::Length:
        return static_cast<std::int64_t>(as_word(e.args[0]).size());
      case PredOp::Count: {
        Word w = as_word(e.args[0]);
        std::int64_t n = 0;
        for (Symbol s : w) {
          if (std::string(1, s.value()) == e.text) ++n;
        }
        return n;
      }
      case PredOp::First: {
        Word w = as_word(e.args[0]);
        if (w.empty()) throw PredRuntimeError{"first: the word is empty"};
        return std::string(1, w.front().value());
      }
      case PredOp::Last: {
        Word w = as_word(e.args[0]);
        if (w.empty()) throw PredRuntimeError{"last: the word is empty"};
        return std::string(1, w.back().value());
      }
      case PredOp::Rest: {
        Word w = as_word(e.args[0]);
        if (w.empty()) throw PredRuntimeError{"rest: the word is empty"};
        return Word(w.begin() + 1, w.end());
      }
      case PredOp::InLangOf: {
        const RegExp* r = env_.find(e.text);
        if (r == nullptr) {
          throw PredRuntimeError{"in-lang-of: unknown regular expression name: " + e.text};
        }
        return accepts(env_.nfa_for(e.text), as_word(e.args[0]));
      }
    }
    throw std::logic_error("unreachable predicate op");
  }

 private:
  bool as_bool(const PredExpr& e) { return std::get<bool>(eval(e)); }
  std::int64_t as_int(const PredExpr& e) { return std::get<std::int64_t>(eval(e)); }
  Word as_word(const PredExpr& e) { return std::get<Word>(eval(e)); }

  const Word& word_;
  const RegexpEnv& env_;
};

}  // namespace

PredResult eval_pred(const Lambda& p, const Word& w, const RegexpEnv& env) {
  try {
    PV v = PredEval(w, env).eval(p.body);
    if (const auto* b = std::get_if<bool>(&v)) {
      return *b ? PredResult::yes() : PredResult::no();
    }
    return PredResult::non_boolean(pv_rendering(v));
  } catch (const PredRuntimeError& err) {
    return PredResult::failure(err.message);
  }
}

// ---------------------------------------------------------------------------
// File evaluation

namespace {

struct RecipeThrow {
  RecipeError err;
};
struct EvalThrow {
  EvalError err;
};

using Env = std::map<std::string, Value>;

Value datum_to_value(const Datum& d) {
  switch (d.kind) {
    case Datum::Kind::Symbol:
      return Value::symbol(d.text);
    case Datum::Kind::Integer:
      return Value::integer(d.number);
    case Datum::Kind::String:
      return Value::string(d.text);
    case Datum::Kind::List: {
      std::vector<Value> items;
      items.reserve(d.items.size());
      for (const Datum& item : d.items) items.push_back(datum_to_value(item));
      return Value::list(std::move(items));
    }
  }
  throw std::logic_error("unreachable datum kind");
}

void collect_lang_refs(const PredExpr& e, std::vector<const PredExpr*>& out) {
  if (e.op == PredOp::InLangOf) out.push_back(&e);
  for (const PredExpr& a : e.args) collect_lang_refs(a, out);
}

// Captures the lambda together with the regexps it names; every in-lang-of
// target must already be bound to a regexp when the predicate is created.
Predicate make_predicate(const Lambda& lam, const Env& env) {
  std::vector<const PredExpr*> refs;
  collect_lang_refs(lam.body, refs);
  std::map<std::string, RegExp> captured;
  for (const PredExpr* ref : refs) {
    auto it = env.find(ref->text);
    if (it == env.end()) {
      throw EvalThrow{{"in-lang-of: unknown regular expression name: " + ref->text, ref->span}};
    }
    if (!it->second.is_regexp()) {
      throw EvalThrow{{"in-lang-of: " + ref->text + " is not a regular expression", ref->span}};
    }
    captured.emplace(ref->text, it->second.as_regexp());
  }
  auto shared_lam = std::make_shared<const Lambda>(lam);
  auto shared_env = std::make_shared<const RegexpEnv>(std::move(captured));
  return [shared_lam, shared_env](const Word& w) {
    return eval_pred(*shared_lam, w, *shared_env);
  };
}

struct EvalContext {
  ValidationOptions opts;
  TestReport current;  // checks run so far for the current definition
};

Value eval_expr(const Expr& e, const Env& env, EvalContext& ctx) {
  switch (e.kind) {
    case ExprKind::Name: {
      auto it = env.find(e.name);
      if (it != env.end()) return it->second;
      return Value::symbol(e.name);  // unbound names stand for themselves
    }
    case ExprKind::StringLit:
      return Value::string(e.str);
    case ExprKind::IntLit:
      return Value::integer(e.number);
    case ExprKind::Quoted:
      return datum_to_value(*e.datum);
    case ExprKind::Let: {
      Env scope = env;
      for (const Binding& b : e.bindings) {
        Value v = eval_expr(*b.value, scope, ctx);
        scope.insert_or_assign(b.name, std::move(v));
      }
      return eval_expr(*e.body, scope, ctx);
    }
    case ExprKind::Call: {
      std::vector<Value> args;
      args.reserve(e.args.size());
      for (const ExprPtr& a : e.args) args.push_back(eval_expr(*a, env, ctx));

      TestSpec spec;
      for (const KwArg& kw : e.kwargs) {
        switch (kw.key) {
          case KwKey::Sigma:
            spec.sigma = eval_expr(*kw.value, env, ctx);
            break;
          case KwKey::Pred:
            spec.pred = make_predicate(*kw.lambda, env);
            break;
          case KwKey::GenCases:
            spec.gen_cases = eval_expr(*kw.value, env, ctx);
            break;
          case KwKey::InLang:
            spec.in_lang = eval_expr(*kw.value, env, ctx);
            break;
          case KwKey::NotInLang:
            spec.not_in_lang = eval_expr(*kw.value, env, ctx);
            break;
        }
      }

      TestReport report;
      BuildResult result = build_checked(e.ctor, args, spec, ctx.opts, &report);
      if (auto* err = std::get_if<RecipeError>(&result)) {
        err->span = e.span;
        throw RecipeThrow{std::move(*err)};
      }
      ctx.current += report;
      return Value::regexp(std::move(std::get<RegExp>(result)));
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

std::map<std::string, RegExp> Session::regexps() const {
  std::map<std::string, RegExp> out;
  for (const auto& [name, value] : env) {
    if (value.is_regexp()) out.emplace(name, value.as_regexp());
  }
  return out;
}

FileResult eval_file(const std::vector<Definition>& defs, const ValidationOptions& opts) {
  Session session;
  Env env;
  EvalContext ctx{opts, {}};
  try {
    for (const Definition& def : defs) {
      ctx.current = {};
      Value v = eval_expr(*def.body, env, ctx);
      env.insert_or_assign(def.name, std::move(v));
      session.reports.push_back({def.name, ctx.current});
    }
  } catch (RecipeThrow& t) {
    return std::move(t.err);
  } catch (EvalThrow& t) {
    return std::move(t.err);
  }
  session.env = std::move(env);
  return session;
}

}  // namespace rexp::dsl
