#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "rexp/automata.hpp"
#include "rexp/validation.hpp"

using namespace rexp;

namespace {

RegExp sing(char ch) { return make_singleton(Symbol(ch)); }

RegExp a_bstar() { return make_concat(sing('a'), make_kleenestar(sing('b'))); }
RegExp b_astar() { return make_concat(sing('b'), make_kleenestar(sing('a'))); }

Value word_value(const std::string& letters) {
  std::vector<Value> symbols;
  for (char ch : letters) symbols.push_back(Value::symbol(std::string(1, ch)));
  return Value::list(std::move(symbols));
}

Value word_list_value(const std::vector<std::string>& words) {
  std::vector<Value> items;
  for (const std::string& w : words) items.push_back(word_value(w));
  return Value::list(std::move(items));
}

Value sigma_value(const std::string& letters) {
  std::vector<Value> symbols;
  for (char ch : letters) symbols.push_back(Value::symbol(std::string(1, ch)));
  return Value::list(std::move(symbols));
}

RecipeError expect_error(BuildResult res) {
  REQUIRE(std::holds_alternative<RecipeError>(res));
  return std::get<RecipeError>(std::move(res));
}

RegExp expect_ok(BuildResult res) {
  REQUIRE(std::holds_alternative<RegExp>(res));
  return std::get<RegExp>(std::move(res));
}

Predicate always_true() {
  return [](const Word&) { return PredResult::yes(); };
}

}  // namespace

TEST_CASE("step five rejects non-regexp arguments with the transcript wording") {
  ValidationOptions opts;

  SUBCASE("kleenestar over a bare symbol") {
    BuildResult res = build_checked(RegExpKind::KleeneStar, {Value::symbol("b")}, {}, opts);
    const RecipeError& err = expect_error(res);
    CHECK(err.step == RecipeStep::Five);
    CHECK(err.tmpl == MessageTemplate::UnaryArgNotRegexp);
    CHECK(err.message ==
          "Step five of the design recipe for regular expressions has not been successfully "
          "completed. The argument to kleenestar-regexp must be a regular expression, but "
          "found: b");
  }

  SUBCASE("kleenestar over a text") {
    BuildResult res = build_checked(RegExpKind::KleeneStar, {Value::string("b")}, {}, opts);
    CHECK(expect_error(res).message ==
          "Step five of the design recipe for regular expressions has not been successfully "
          "completed. The argument to kleenestar-regexp must be a regular expression, but "
          "found: \"b\"");
  }

  SUBCASE("second argument of a concatenation") {
    RegExp bstar = make_kleenestar(sing('b'));
    BuildResult res =
        build_checked(RegExpKind::Concat, {Value::regexp(bstar), Value::string("a")}, {}, opts);
    const RecipeError& err = expect_error(res);
    CHECK(err.tmpl == MessageTemplate::BinaryArgNotRegexp);
    CHECK(err.message ==
          "Step five of the design recipe for regular expressions has not been successfully "
          "completed. The second argument to concat-regexp must be a regular expression, but "
          "found: \"a\"");
  }

  SUBCASE("first argument of a concatenation") {
    RegExp evenastar = make_kleenestar(sing('b'));
    BuildResult res =
        build_checked(RegExpKind::Concat, {Value::string("a"), Value::regexp(evenastar)}, {},
                      opts);
    CHECK(expect_error(res).message ==
          "Step five of the design recipe for regular expressions has not been successfully "
          "completed. The first argument to concat-regexp must be a regular expression, but "
          "found: \"a\"");
  }

  SUBCASE("the first bad argument wins when both are bad") {
    BuildResult res = build_checked(RegExpKind::Union,
                                    {Value::integer(1), Value::string("x")}, {}, opts);
    CHECK(expect_error(res).message.find("The first argument to union-regexp") !=
          std::string::npos);
  }

  SUBCASE("singleton arguments must be a valid one-letter text") {
    auto message_for = [&](Value v) {
      return expect_error(build_checked(RegExpKind::Singleton, {std::move(v)}, {}, opts)).message;
    };
    std::string expected_prefix =
        "Step five of the design recipe for regular expressions has not been successfully "
        "completed. The argument to singleton-regexp must be a length-one text containing a "
        "lowercase Roman letter or one of $ & ! *, but found: ";
    CHECK(message_for(Value::string("ab")) == expected_prefix + "\"ab\"");
    CHECK(message_for(Value::string("B")) == expected_prefix + "\"B\"");
    CHECK(message_for(Value::symbol("a")) == expected_prefix + "a");
    CHECK(message_for(Value::integer(3)) == expected_prefix + "3");

    expect_ok(build_checked(RegExpKind::Singleton, {Value::string("$")}, {}, opts));
  }
}

TEST_CASE("step one validates the alphabet before anything in step six") {
  ValidationOptions opts;
  std::vector<Value> args = {Value::regexp(a_bstar()), Value::regexp(b_astar())};

  SUBCASE("sigma must be a list") {
    TestSpec spec;
    spec.sigma = Value::integer(3);
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.step == RecipeStep::One);
    CHECK(err.message ==
          "Step one of the design recipe for regular expressions has not been successfully "
          "completed. The regexp alphabet must be a list of lowercase alphabet letters, but "
          "found: 3");
  }

  SUBCASE("sigma elements must be valid symbols") {
    TestSpec spec;
    spec.sigma = Value::list({Value::symbol("a"), Value::symbol("B")});
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.tmpl == MessageTemplate::SigmaInvalidElement);
    CHECK(err.message ==
          "Step one of the design recipe for regular expressions has not been successfully "
          "completed. The input alphabet must only contain lowercase alphabet letters, but "
          "found: B");
  }

  SUBCASE("sigma must not contain duplicates") {
    TestSpec spec;
    spec.sigma = sigma_value("aba");
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.tmpl == MessageTemplate::SigmaDuplicate);
    CHECK(err.message ==
          "Step one of the design recipe for regular expressions has not been successfully "
          "completed. The sigma must not contain duplicate elements, but found: a");
  }

  SUBCASE("singletons must come from sigma") {
    TestSpec spec;
    spec.sigma = sigma_value("a");
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.tmpl == MessageTemplate::SingletonsNotInSigma);
    CHECK(err.message ==
          "Step one of the design recipe for regular expressions has not been successfully "
          "completed. The regular expression contains singletons built from elements not in "
          "the input alphabet: (b)");
  }

  SUBCASE("step five fires before step one") {
    TestSpec spec;
    spec.sigma = Value::integer(3);  // also wrong, but later in the order
    BuildResult res = build_checked(RegExpKind::KleeneStar, {Value::symbol("b")}, spec, opts);
    CHECK(expect_error(res).step == RecipeStep::Five);
  }
}

TEST_CASE("step six gen-cases checks precede the predicate run") {
  ValidationOptions opts;
  std::vector<Value> args = {Value::regexp(a_bstar()), Value::regexp(b_astar())};

  SUBCASE("gen-cases must be a positive integer") {
    TestSpec spec;
    spec.pred = always_true();
    spec.gen_cases = Value::symbol("a");
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.step == RecipeStep::Six);
    CHECK(err.message ==
          "Step six of the design recipe for regular expressions has not been successfully "
          "completed. The number of generated test cases to check with the predicate must be "
          "a positive integer, but found: a");

    spec.gen_cases = Value::integer(0);
    CHECK(expect_error(build_checked(RegExpKind::Union, args, spec, opts)).tmpl ==
          MessageTemplate::GenCasesNotPositive);
  }

  SUBCASE("gen-cases requires a predicate") {
    TestSpec spec;
    spec.gen_cases = Value::integer(3);
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.tmpl == MessageTemplate::GenCasesWithoutPred);
    CHECK(err.message ==
          "Step six of the design recipe for regular expressions has not been successfully "
          "completed. The number of generated test cases requires a predicate, but no "
          "predicate was provided");
  }

  SUBCASE("a bad count masks a bad predicate") {
    TestSpec spec;
    spec.gen_cases = Value::symbol("a");
    spec.pred = [](const Word&) { return PredResult::no(); };
    CHECK(expect_error(build_checked(RegExpKind::Union, args, spec, opts)).tmpl ==
          MessageTemplate::GenCasesNotPositive);
  }
}

TEST_CASE("step three evaluates the predicate on generated words") {
  ValidationOptions opts;
  std::vector<Value> args = {Value::regexp(a_bstar()), Value::regexp(b_astar())};

  SUBCASE("failures list the offending generated words") {
    TestSpec spec;
    spec.gen_cases = Value::integer(3);
    // Mimics the transcript bug: words starting with a are rejected.
    spec.pred = [](const Word& w) {
      return (!w.empty() && w.front() == Symbol('b')) ? PredResult::yes() : PredResult::no();
    };
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.step == RecipeStep::Three);
    CHECK(err.tmpl == MessageTemplate::PredicateDoesNotHold);
    std::string prefix =
        "Step three of the design recipe for regular expressions has not been successfully "
        "completed. The given predicate does not hold for the following words generated using "
        "the regexp: ((a";
    CHECK(err.message.substr(0, prefix.size()) == prefix);
  }

  SUBCASE("a non-boolean result is scanned for first") {
    TestSpec spec;
    spec.gen_cases = Value::integer(5);
    int calls = 0;
    spec.pred = [&calls](const Word&) {
      ++calls;
      return calls == 4 ? PredResult::non_boolean("3") : PredResult::no();
    };
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.tmpl == MessageTemplate::PredicateNonBoolean);
    CHECK(err.message ==
          "Step three of the design recipe for regular expressions has not been successfully "
          "completed. The given predicate must produce a Boolean value, but produced: 3");
  }

  SUBCASE("predicate evaluation errors fold into the failing-word list") {
    TestSpec spec;
    spec.pred = [](const Word&) { return PredResult::failure("first: the word is empty"); };
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.tmpl == MessageTemplate::PredicateDoesNotHold);
  }

  SUBCASE("the predicate is skipped entirely for an empty language") {
    TestSpec spec;
    int calls = 0;
    spec.pred = [&calls](const Word&) {
      ++calls;
      return PredResult::no();
    };
    TestReport report;
    expect_ok(build_checked(RegExpKind::Concat,
                            {Value::regexp(make_null()), Value::regexp(sing('a'))}, spec, opts,
                            &report));
    CHECK(calls == 0);
    CHECK(report.predicate_checks == 0);
  }

  SUBCASE("default gen cases apply when no count is given") {
    TestSpec spec;
    int calls = 0;
    spec.pred = [&calls](const Word&) {
      ++calls;
      return PredResult::yes();
    };
    TestReport report;
    expect_ok(build_checked(RegExpKind::Union, args, spec, opts, &report));
    CHECK(calls == opts.default_gen_cases);
    CHECK(report.predicate_checks == opts.default_gen_cases);
  }
}

TEST_CASE("steps four and six validate the expected-word lists") {
  ValidationOptions opts;
  std::vector<Value> args = {Value::regexp(a_bstar()), Value::regexp(b_astar())};

  SUBCASE("the value must be a list of words") {
    TestSpec spec;
    spec.in_lang = Value::integer(3);
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.step == RecipeStep::Four);
    CHECK(err.message ==
          "Step four of the design recipe for regular expressions has not been successfully "
          "completed. The words generated by the regular expression must be a list of words, "
          "but found: 3");

    spec.in_lang.reset();
    spec.not_in_lang = Value::list({Value::integer(7)});
    const RecipeError& err2 = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err2.message ==
          "Step four of the design recipe for regular expressions has not been successfully "
          "completed. The words not generated by the regular expression must be a list of "
          "words, but found: 7");
  }

  SUBCASE("words outside the alphabet reproduce the transcript message") {
    TestSpec spec;
    spec.sigma = sigma_value("ab");
    spec.in_lang = Value::list({word_value("abbv"), word_value("bb")});
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.step == RecipeStep::Six);
    CHECK(err.tmpl == MessageTemplate::TestWordsNotInSigma);
    CHECK(err.message ==
          "Step six of the design recipe for regular expressions has not been successfully "
          "completed. The following words to be generated by the regular expression: "
          "((a b b v)) contain characters not in the regular expression's alphabet: (a b)");
  }

  SUBCASE("rejected in-lang words reproduce the transcript message") {
    TestSpec spec;
    spec.sigma = sigma_value("ab");
    spec.in_lang = word_list_value({"abbb", "bb"});
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.tmpl == MessageTemplate::InLangNotGenerated);
    CHECK(err.message ==
          "Step six of the design recipe for regular expressions has not been successfully "
          "completed. The following words are expected to be generated by the constructed "
          "union-regexp but are not generated: ((b b))");
  }

  SUBCASE("accepted not-in-lang words reproduce the transcript message") {
    TestSpec spec;
    spec.sigma = sigma_value("ab");
    spec.in_lang = word_list_value({"abbb"});
    spec.not_in_lang = word_list_value({"ab", "bb"});
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.tmpl == MessageTemplate::NotInLangGenerated);
    CHECK(err.message ==
          "Step six of the design recipe for regular expressions has not been successfully "
          "completed. The following words are expected to not be generated by the constructed "
          "union-regexp but are generated: ((a b))");
  }

  SUBCASE("epsilon is a word and membership checks respect it") {
    TestSpec spec;
    spec.in_lang = Value::list({Value::symbol("ε")});
    RegExp bstar = make_kleenestar(sing('b'));
    TestReport report;
    expect_ok(build_checked(RegExpKind::KleeneStar, {Value::regexp(sing('b'))}, spec, opts,
                            &report));
    CHECK(report.in_lang_checks == 1);

    TestSpec bad;
    bad.in_lang = Value::list({Value::symbol("ε")});
    std::vector<Value> concat_args = {Value::regexp(bstar), Value::regexp(sing('a'))};
    const RecipeError& err =
        expect_error(build_checked(RegExpKind::Concat, concat_args, bad, opts));
    CHECK(err.tmpl == MessageTemplate::InLangNotGenerated);
    CHECK(err.message.find("not generated: (ε)") != std::string::npos);
  }

  SUBCASE("without sigma the alphabet derives from the singletons") {
    TestSpec spec;
    spec.not_in_lang = word_list_value({"c"});
    RegExp bstar = make_kleenestar(sing('b'));
    std::vector<Value> concat_args = {Value::regexp(bstar), Value::regexp(sing('a'))};
    const RecipeError& err =
        expect_error(build_checked(RegExpKind::Concat, concat_args, spec, opts));
    CHECK(err.tmpl == MessageTemplate::TestWordsNotInSigma);
    CHECK(err.message.find("alphabet: (a b)") != std::string::npos);
  }

  SUBCASE("in-lang failures mask not-in-lang failures") {
    TestSpec spec;
    spec.in_lang = word_list_value({"bb"});    // rejected
    spec.not_in_lang = word_list_value({"ab"});  // accepted
    const RecipeError& err = expect_error(build_checked(RegExpKind::Union, args, spec, opts));
    CHECK(err.tmpl == MessageTemplate::InLangNotGenerated);
  }
}

TEST_CASE("a fully specified correct call reports all checks") {
  ValidationOptions opts;
  std::vector<Value> args = {Value::regexp(a_bstar()), Value::regexp(b_astar())};
  TestSpec spec;
  spec.sigma = sigma_value("ab");
  spec.pred = always_true();
  spec.gen_cases = Value::integer(3);
  spec.in_lang = word_list_value({"abbb", "ab"});
  spec.not_in_lang = word_list_value({"bb"});

  TestReport report;
  const RegExp& r = expect_ok(build_checked(RegExpKind::Union, args, spec, opts, &report));
  CHECK(is_union(r));
  CHECK(report.sigma_checks == 1);
  CHECK(report.predicate_checks == 3);
  CHECK(report.in_lang_checks == 2);
  CHECK(report.not_in_lang_checks == 1);
  CHECK(report.total() == 7);

  // Success soundness: everything claimed checked actually holds.
  Nfa n = to_nfa(r);
  CHECK(n.accepts(word_from("abbb")));
  CHECK(n.accepts(word_from("ab")));
  CHECK_FALSE(n.accepts(word_from("bb")));
}

TEST_CASE("run_spec_tests is the testing half of build_checked") {
  ValidationOptions opts;
  RegExp u = make_union(a_bstar(), b_astar());

  TestSpec in_ok;
  in_ok.in_lang = word_list_value({"ab"});
  auto res = run_spec_tests(u, in_ok, opts);
  REQUIRE(std::holds_alternative<TestReport>(res));
  CHECK(std::get<TestReport>(res).in_lang_checks == 1);

  TestSpec not_ok;
  not_ok.in_lang = word_list_value({"bb"});
  auto res2 = run_spec_tests(u, not_ok, opts);
  REQUIRE(std::holds_alternative<RecipeError>(res2));
  CHECK(std::get<RecipeError>(res2).message.find("but are not generated: ((b b))") !=
        std::string::npos);
}

TEST_CASE("the message catalog binds each template to exactly one step") {
  auto catalog = message_catalog();
  CHECK(catalog.size() == 15);
  for (const auto& [tmpl, body] : catalog) {
    CHECK_FALSE(body.empty());
    // Non-prescription: messages state facts, not fixes.
    CHECK(body.find("try") == std::string::npos);
    CHECK(body.find("should be changed") == std::string::npos);
    CHECK(body.find("replace") == std::string::npos);
    RecipeStep step = template_step(tmpl);
    CHECK((step == RecipeStep::One || step == RecipeStep::Three || step == RecipeStep::Four ||
           step == RecipeStep::Five || step == RecipeStep::Six));
  }
  CHECK(template_step(MessageTemplate::PredicateDoesNotHold) == RecipeStep::Three);
  CHECK(template_step(MessageTemplate::TestWordsNotList) == RecipeStep::Four);
  CHECK(template_step(MessageTemplate::TestWordsNotInSigma) == RecipeStep::Six);
  CHECK(std::string(step_word(RecipeStep::Five)) == "five");
}
