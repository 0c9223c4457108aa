#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "rexp/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Check regular-expression definition files against the design recipe"};
  rexp::cli::CliConfig cfg;
  std::string format = "text";

  app.add_option("inputs", cfg.inputs, "definition files to check")->required();
  app.add_option("--seed", cfg.seed, "seed for test-word generation")
      ->envname("RECIPE_REGEX_SEED");
  app.add_option("--max-star-reps", cfg.max_star_reps,
                 "longest repetition a kleenestar may generate")
      ->check(CLI::PositiveNumber);
  app.add_option("--default-gen-cases", cfg.default_gen_cases,
                 "generated predicate cases when #:gen-cases is absent")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", cfg.quiet, "suppress success output in text mode");
  app.add_flag("--replay", cfg.replay,
               "treat the inputs as successive versions of one program");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is reported like any other parse error
  }

  cfg.format = format == "json" ? rexp::cli::OutputFormat::Json : rexp::cli::OutputFormat::Text;

  rexp::cli::RunResult result = rexp::cli::run(cfg);
  std::fputs(result.output.c_str(), stdout);
  return result.exit_code;
}
