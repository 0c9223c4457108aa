#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rexp/span.hpp"
#include "rexp/value.hpp"
#include "rexp/wordgen.hpp"

namespace rexp {

// The design-recipe steps that can fail during construction.  Step two
// (naming) and step seven (documentation) have no runtime check.
enum class RecipeStep { One, Three, Four, Five, Six };

// English word used in messages: "one", "three", ...
const char* step_word(RecipeStep step);

// Every diagnostic is an instance of exactly one template below, and every
// template belongs to exactly one step.
enum class MessageTemplate {
  UnaryArgNotRegexp,      // step five
  BinaryArgNotRegexp,     // step five
  SingletonArgInvalid,    // step five
  SigmaNotList,           // step one
  SigmaInvalidElement,    // step one
  SigmaDuplicate,         // step one
  SingletonsNotInSigma,   // step one
  GenCasesNotPositive,    // step six
  GenCasesWithoutPred,    // step six
  PredicateDoesNotHold,   // step three
  PredicateNonBoolean,    // step three
  TestWordsNotList,       // step four
  TestWordsNotInSigma,    // step six
  InLangNotGenerated,     // step six
  NotInLangGenerated,     // step six
};

RecipeStep template_step(MessageTemplate t);

// All message bodies, with {placeholders} unexpanded; keyed by template.
// Useful for tests and tooling that reason about the catalog as data.
std::vector<std::pair<MessageTemplate, std::string>> message_catalog();

struct RecipeError {
  RecipeStep step;
  MessageTemplate tmpl;
  std::string message;             // complete, single-line text
  std::optional<SourceSpan> span;  // attached by the definition-file front end
};

// Optional testing parameters accompanying a constructor call.  All fields
// except the predicate arrive as raw values and are themselves validated.
struct TestSpec {
  std::optional<Value> sigma;
  std::optional<Predicate> pred;
  std::optional<Value> gen_cases;
  std::optional<Value> in_lang;
  std::optional<Value> not_in_lang;
};

// Counts of individual checks that ran.  A report is only produced when all
// of them passed; the first failing check aborts with a RecipeError.
struct TestReport {
  int sigma_checks = 0;        // 1 when an alphabet was validated
  int predicate_checks = 0;    // generated words tested against the predicate
  int in_lang_checks = 0;      // membership checks for words that must match
  int not_in_lang_checks = 0;  // membership checks for words that must not

  int total() const {
    return sigma_checks + predicate_checks + in_lang_checks + not_in_lang_checks;
  }
  TestReport& operator+=(const TestReport& other);
};

struct ValidationOptions {
  GenConfig gen;
  int default_gen_cases = 5;  // predicate cases when #:gen-cases is absent
};

using BuildResult = std::variant<RegExp, RecipeError>;

// Checked construction.  Verifies, in a fixed order and reporting only the
// first failure: step five (arguments are regular expressions / a valid
// singleton text), step one (the alphabet), step six (the generation count),
// step three (the predicate holds on generated words), and steps four and six
// for the expected-word lists.  On success, *report (when given) receives the
// counts of checks that ran.
BuildResult build_checked(RegExpKind kind, const std::vector<Value>& args,
                          const TestSpec& spec, const ValidationOptions& opts,
                          TestReport* report = nullptr);

// The testing half of build_checked, for a regexp that already exists.
std::variant<TestReport, RecipeError> run_spec_tests(const RegExp& r, const TestSpec& spec,
                                                     const ValidationOptions& opts);

}  // namespace rexp
