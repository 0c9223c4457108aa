#include "rexp/validation.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>
#include <stdexcept>

#include "rexp/automata.hpp"

namespace rexp {

const char* step_word(RecipeStep step) {
  switch (step) {
    case RecipeStep::One: return "one";
    case RecipeStep::Three: return "three";
    case RecipeStep::Four: return "four";
    case RecipeStep::Five: return "five";
    case RecipeStep::Six: return "six";
  }
  return "?";
}

RecipeStep template_step(MessageTemplate t) {
  switch (t) {
    case MessageTemplate::UnaryArgNotRegexp:
    case MessageTemplate::BinaryArgNotRegexp:
    case MessageTemplate::SingletonArgInvalid:
      return RecipeStep::Five;
    case MessageTemplate::SigmaNotList:
    case MessageTemplate::SigmaInvalidElement:
    case MessageTemplate::SigmaDuplicate:
    case MessageTemplate::SingletonsNotInSigma:
      return RecipeStep::One;
    case MessageTemplate::GenCasesNotPositive:
    case MessageTemplate::GenCasesWithoutPred:
      return RecipeStep::Six;
    case MessageTemplate::PredicateDoesNotHold:
    case MessageTemplate::PredicateNonBoolean:
      return RecipeStep::Three;
    case MessageTemplate::TestWordsNotList:
      return RecipeStep::Four;
    case MessageTemplate::TestWordsNotInSigma:
    case MessageTemplate::InLangNotGenerated:
    case MessageTemplate::NotInLangGenerated:
      return RecipeStep::Six;
  }
  return RecipeStep::Five;
}

std::vector<std::pair<MessageTemplate, std::string>> message_catalog() {
  using T = MessageTemplate;
  return {
      {T::UnaryArgNotRegexp,
       "The argument to {kind}-regexp must be a regular expression, but found: {value}"},
      {T::BinaryArgNotRegexp,
       "The {position} argument to {kind}-regexp must be a regular expression, but found: "
       "{value}"},
      {T::SingletonArgInvalid,
       "The argument to singleton-regexp must be a length-one text containing a lowercase "
       "Roman letter or one of $ & ! *, but found: {value}"},
      {T::SigmaNotList,
       "The regexp alphabet must be a list of lowercase alphabet letters, but found: {value}"},
      {T::SigmaInvalidElement,
       "The input alphabet must only contain lowercase alphabet letters, but found: {value}"},
      {T::SigmaDuplicate, "The sigma must not contain duplicate elements, but found: {value}"},
      {T::SingletonsNotInSigma,
       "The regular expression contains singletons built from elements not in the input "
       "alphabet: {symbols}"},
      {T::GenCasesNotPositive,
       "The number of generated test cases to check with the predicate must be a positive "
       "integer, but found: {value}"},
      {T::GenCasesWithoutPred,
       "The number of generated test cases requires a predicate, but no predicate was provided"},
      {T::PredicateDoesNotHold,
       "The given predicate does not hold for the following words generated using the regexp: "
       "{words}"},
      {T::PredicateNonBoolean,
       "The given predicate must produce a Boolean value, but produced: {value}"},
      {T::TestWordsNotList, "The {words-role} must be a list of words, but found: {value}"},
      {T::TestWordsNotInSigma,
       "The following words {expectation} by the regular expression: {words} contain "
       "characters not in the regular expression's alphabet: {alphabet}"},
      {T::InLangNotGenerated,
       "The following words are expected to be generated by the constructed {kind}-regexp but "
       "are not generated: {words}"},
      {T::NotInLangGenerated,
       "The following words are expected to not be generated by the constructed {kind}-regexp "
       "but are generated: {words}"},
  };
}

TestReport& TestReport::operator+=(const TestReport& other) {
  sigma_checks += other.sigma_checks;
  predicate_checks += other.predicate_checks;
  in_lang_checks += other.in_lang_checks;
  not_in_lang_checks += other.not_in_lang_checks;
  return *this;
}

namespace {

std::string step_prefix(RecipeStep step) {
  return std::string("Step ") + step_word(step) +
         " of the design recipe for regular expressions has not been successfully completed. ";
}

RecipeError recipe_error(MessageTemplate t, const std::string& body) {
  RecipeStep step = template_step(t);
  return RecipeError{step, t, step_prefix(step) + body, std::nullopt};
}

std::string ctor_name(RegExpKind kind) { return std::string(kind_name(kind)) + "-regexp"; }

// --- step five -------------------------------------------------------------

RecipeError err_unary_arg(RegExpKind kind, const Value& v) {
  return recipe_error(MessageTemplate::UnaryArgNotRegexp,
                      "The argument to " + ctor_name(kind) +
                          " must be a regular expression, but found: " + render_value(v));
}

RecipeError err_binary_arg(RegExpKind kind, bool first, const Value& v) {
  return recipe_error(MessageTemplate::BinaryArgNotRegexp,
                      std::string("The ") + (first ? "first" : "second") + " argument to " +
                          ctor_name(kind) +
                          " must be a regular expression, but found: " + render_value(v));
}

RecipeError err_singleton_arg(const Value& v) {
  return recipe_error(MessageTemplate::SingletonArgInvalid,
                      "The argument to singleton-regexp must be a length-one text containing a "
                      "lowercase Roman letter or one of $ & ! *, but found: " +
                          render_value(v));
}

// --- step one --------------------------------------------------------------

RecipeError err_sigma_not_list(const Value& v) {
  return recipe_error(
      MessageTemplate::SigmaNotList,
      "The regexp alphabet must be a list of lowercase alphabet letters, but found: " +
          render_value(v));
}

RecipeError err_sigma_element(const Value& v) {
  return recipe_error(
      MessageTemplate::SigmaInvalidElement,
      "The input alphabet must only contain lowercase alphabet letters, but found: " +
          render_value(v));
}

RecipeError err_sigma_duplicate(Symbol s) {
  return recipe_error(MessageTemplate::SigmaDuplicate,
                      std::string("The sigma must not contain duplicate elements, but found: ") +
                          s.value());
}

RecipeError err_singletons_not_in_sigma(const std::set<Symbol>& missing) {
  std::string rendered = "(";
  bool space = false;
  for (Symbol s : missing) {
    if (space) rendered.push_back(' ');
    rendered.push_back(s.value());
    space = true;
  }
  rendered.push_back(')');
  return recipe_error(MessageTemplate::SingletonsNotInSigma,
                      "The regular expression contains singletons built from elements not in "
                      "the input alphabet: " +
                          rendered);
}

// --- step six: generation count ---------------------------------------------

RecipeError err_gen_cases(const Value& v) {
  return recipe_error(MessageTemplate::GenCasesNotPositive,
                      "The number of generated test cases to check with the predicate must be "
                      "a positive integer, but found: " +
                          render_value(v));
}

RecipeError err_gen_cases_without_pred() {
  return recipe_error(
      MessageTemplate::GenCasesWithoutPred,
      "The number of generated test cases requires a predicate, but no predicate was provided");
}

// --- step three --------------------------------------------------------------

RecipeError err_pred_does_not_hold(const std::vector<Word>& failing) {
  return recipe_error(MessageTemplate::PredicateDoesNotHold,
                      "The given predicate does not hold for the following words generated "
                      "using the regexp: " +
                          render_word_list(failing));
}

RecipeError err_pred_non_boolean(const std::string& produced) {
  return recipe_error(
      MessageTemplate::PredicateNonBoolean,
      "The given predicate must produce a Boolean value, but produced: " + produced);
}

// --- steps four and six: expected-word lists ---------------------------------

std::string words_role(bool expect_in) {
  return expect_in ? "words generated by the regular expression"
                   : "words not generated by the regular expression";
}

RecipeError err_not_word_list(bool expect_in, const Value& v) {
  return recipe_error(MessageTemplate::TestWordsNotList,
                      "The " + words_role(expect_in) +
                          " must be a list of words, but found: " + render_value(v));
}

// A word candidate as raw text: one UTF-8 code point per element.  This shape
// survives characters outside the symbol universe long enough to produce an
// alphabet diagnostic for them.
using RawWord = std::vector<std::string>;

std::string render_raw_word(const RawWord& w) {
  if (w.empty()) return "ε";
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += w[i];
  }
  out.push_back(')');
  return out;
}

std::string render_raw_word_list(const std::vector<RawWord>& ws) {
  std::string out = "(";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += render_raw_word(ws[i]);
  }
  out.push_back(')');
  return out;
}

RecipeError err_words_not_in_sigma(bool expect_in, const std::vector<RawWord>& offending,
                                   const Alphabet& alphabet) {
  return recipe_error(MessageTemplate::TestWordsNotInSigma,
                      std::string("The following words ") +
                          (expect_in ? "to be generated" : "not to be generated") +
                          " by the regular expression: " + render_raw_word_list(offending) +
                          " contain characters not in the regular expression's alphabet: " +
                          alphabet.render());
}

RecipeError err_in_lang_not_generated(RegExpKind kind, const std::vector<Word>& words) {
  return recipe_error(MessageTemplate::InLangNotGenerated,
                      "The following words are expected to be generated by the constructed " +
                          ctor_name(kind) +
                          " but are not generated: " + render_word_list(words));
}

RecipeError err_not_in_lang_generated(RegExpKind kind, const std::vector<Word>& words) {
  return recipe_error(MessageTemplate::NotInLangGenerated,
                      "The following words are expected to not be generated by the constructed " +
                          ctor_name(kind) + " but are generated: " + render_word_list(words));
}

// -----------------------------------------------------------------------------

const std::string kEpsilon = "ε";

// A value is word-shaped when it is the bare epsilon symbol, the empty list,
// or a list of single-character symbols (characters need not be in the
// universe here; the alphabet check reports those).
std::optional<RawWord> as_raw_word(const Value& v) {
  if (v.is_symbol() && v.as_symbol() == kEpsilon) return RawWord{};
  if (!v.is_list()) return std::nullopt;
  RawWord w;
  for (const Value& item : v.as_list()) {
    if (!item.is_symbol()) return std::nullopt;
    const std::string& text = item.as_symbol();
    if (utf8_length(text) != 1) return std::nullopt;
    w.push_back(text);
  }
  return w;
}

bool raw_char_in_alphabet(const std::string& cp, const Alphabet& alphabet) {
  return cp.size() == 1 && alphabet.contains(cp[0]);
}

Word to_word(const RawWord& raw) {
  Word w;
  w.reserve(raw.size());
  for (const std::string& cp : raw) w.push_back(Symbol(cp[0]));
  return w;
}

// Step 1: sigma must be a list of valid, duplicate-free symbols covering the
// singletons of the regexp.
std::variant<Alphabet, RecipeError> check_sigma(const Value& sigma, const RegExp& r) {
  if (!sigma.is_list()) return err_sigma_not_list(sigma);
  std::vector<Symbol> symbols;
  for (const Value& item : sigma.as_list()) {
    if (!item.is_symbol()) return err_sigma_element(item);
    const std::string& text = item.as_symbol();
    if (text.size() != 1 || !Symbol::valid_char(text[0])) return err_sigma_element(item);
    symbols.push_back(Symbol(text[0]));
  }
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (symbols[i] == symbols[j]) return err_sigma_duplicate(symbols[i]);
    }
  }
  Alphabet alphabet = *Alphabet::from_symbols(symbols);
  std::set<Symbol> missing;
  for (Symbol s : collect_singletons(r)) {
    if (!alphabet.contains(s)) missing.insert(s);
  }
  if (!missing.empty()) return err_singletons_not_in_sigma(missing);
  return alphabet;
}

Alphabet derived_alphabet(const RegExp& r) {
  std::set<Symbol> used = collect_singletons(r);
  return *Alphabet::from_symbols(std::vector<Symbol>(used.begin(), used.end()));
}

// Steps 4 and 6 for one expected-word list.
std::optional<RecipeError> check_word_list(const Value& v, bool expect_in, RegExpKind kind,
                                           const Nfa& nfa, const Alphabet& alphabet,
                                           int& checks) {
  if (!v.is_list()) return err_not_word_list(expect_in, v);
  std::vector<RawWord> raws;
  for (const Value& item : v.as_list()) {
    std::optional<RawWord> raw = as_raw_word(item);
    if (!raw) return err_not_word_list(expect_in, item);
    raws.push_back(std::move(*raw));
  }

  std::vector<RawWord> outside;
  for (const RawWord& raw : raws) {
    bool ok = std::all_of(raw.begin(), raw.end(), [&](const std::string& cp) {
      return raw_char_in_alphabet(cp, alphabet);
    });
    if (!ok) outside.push_back(raw);
  }
  if (!outside.empty()) return err_words_not_in_sigma(expect_in, outside, alphabet);

  std::vector<Word> wrong;
  for (const RawWord& raw : raws) {
    Word w = to_word(raw);
    bool accepted = nfa.accepts(w);
    if (accepted != expect_in) wrong.push_back(std::move(w));
  }
  if (!wrong.empty()) {
    return expect_in ? err_in_lang_not_generated(kind, wrong)
                     : err_not_in_lang_generated(kind, wrong);
  }
  checks += static_cast<int>(raws.size());
  return std::nullopt;
}

// Steps 1, 6, 3, 4/6 in their fixed order.  Reports only the first failure.
std::variant<TestReport, RecipeError> run_checks(const RegExp& r, RegExpKind kind,
                                                 const TestSpec& spec,
                                                 const ValidationOptions& opts) {
  TestReport report;

  // Step 1: the alphabet.
  Alphabet alphabet;
  if (spec.sigma) {
    auto checked = check_sigma(*spec.sigma, r);
    if (auto* err = std::get_if<RecipeError>(&checked)) return *err;
    alphabet = std::get<Alphabet>(checked);
    report.sigma_checks = 1;
  } else {
    alphabet = derived_alphabet(r);
  }

  // Step 6: the generation count needs to be usable before any word is drawn.
  if (spec.gen_cases) {
    const Value& v = *spec.gen_cases;
    if (!v.is_integer() || v.as_integer() < 1) return err_gen_cases(v);
    if (!spec.pred) return err_gen_cases_without_pred();
  }

  // Step 3: the predicate must hold on generated words.
  if (spec.pred && !is_empty_language(r)) {
    std::int64_t wanted =
        spec.gen_cases ? spec.gen_cases->as_integer() : opts.default_gen_cases;
    int n = static_cast<int>(
        std::clamp<std::int64_t>(wanted, 1, std::numeric_limits<int>::max()));
    std::vector<Word> words = gen_many(r, n, opts.gen);
    std::vector<PredResult> results;
    results.reserve(words.size());
    for (const Word& w : words) results.push_back((*spec.pred)(w));

    for (const PredResult& res : results) {
      if (res.kind == PredResult::Kind::NonBoolean) return err_pred_non_boolean(res.produced);
    }
    std::vector<Word> failing;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (results[i].kind != PredResult::Kind::True) failing.push_back(words[i]);
    }
    if (!failing.empty()) return err_pred_does_not_hold(failing);
    report.predicate_checks = n;
  }

  // Steps 4 and 6: expected-word lists, in-language first.
  if (spec.in_lang || spec.not_in_lang) {
    Nfa nfa = to_nfa(r);
    if (spec.in_lang) {
      auto err = check_word_list(*spec.in_lang, true, kind, nfa, alphabet,
                                 report.in_lang_checks);
      if (err) return *err;
    }
    if (spec.not_in_lang) {
      auto err = check_word_list(*spec.not_in_lang, false, kind, nfa, alphabet,
                                 report.not_in_lang_checks);
      if (err) return *err;
    }
  }

  return report;
}

}  // namespace

BuildResult build_checked(RegExpKind kind, const std::vector<Value>& args, const TestSpec& spec,
                          const ValidationOptions& opts, TestReport* report) {
  // Step 5: every argument must be the right kind of thing.
  std::optional<RegExp> built;
  switch (kind) {
    case RegExpKind::Null:
      if (!args.empty()) throw std::logic_error("null-regexp takes no arguments");
      built = make_null();
      break;
    case RegExpKind::Empty:
      if (!args.empty()) throw std::logic_error("empty-regexp takes no arguments");
      built = make_empty();
      break;
    case RegExpKind::Singleton: {
      if (args.size() != 1) throw std::logic_error("singleton-regexp takes one argument");
      const Value& v = args[0];
      if (!v.is_string() || v.as_string().size() != 1 || !Symbol::valid_char(v.as_string()[0])) {
        return err_singleton_arg(v);
      }
      built = make_singleton(Symbol(v.as_string()[0]));
      break;
    }
    case RegExpKind::Union:
    case RegExpKind::Concat: {
      if (args.size() != 2) throw std::logic_error("binary constructor takes two arguments");
      if (!args[0].is_regexp()) return err_binary_arg(kind, true, args[0]);
      if (!args[1].is_regexp()) return err_binary_arg(kind, false, args[1]);
      built = kind == RegExpKind::Union ? make_union(args[0].as_regexp(), args[1].as_regexp())
                                        : make_concat(args[0].as_regexp(), args[1].as_regexp());
      break;
    }
    case RegExpKind::KleeneStar: {
      if (args.size() != 1) throw std::logic_error("kleenestar-regexp takes one argument");
      if (!args[0].is_regexp()) return err_unary_arg(kind, args[0]);
      built = make_kleenestar(args[0].as_regexp());
      break;
    }
  }

  auto res = run_checks(*built, kind, spec, opts);
  if (auto* err = std::get_if<RecipeError>(&res)) return *err;
  if (report) *report = std::get<TestReport>(res);
  return *built;
}

std::variant<TestReport, RecipeError> run_spec_tests(const RegExp& r, const TestSpec& spec,
                                                     const ValidationOptions& opts) {
  return run_checks(r, r.kind(), spec, opts);
}

}  // namespace rexp
