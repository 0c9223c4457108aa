#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rexp/dsl.hpp"

namespace rexp::cli {

enum class OutputFormat { Text, Json };

struct CliConfig {
  std::vector<std::string> inputs;
  std::uint64_t seed = 1234;
  int max_star_reps = 10;
  int default_gen_cases = 5;
  OutputFormat format = OutputFormat::Text;
  bool quiet = false;   // suppress success output in text mode
  bool replay = false;  // treat inputs as successive versions of one program

  ValidationOptions validation_options() const;
};

struct DefinitionSummary {
  std::string file;
  std::string name;
  TestReport report;
};

// Result of checking one file.
struct RunOutcome {
  enum class Status { Ok, Recipe, Parse };  // Parse also covers eval and I/O errors

  Status status = Status::Ok;
  std::string file;
  std::string source;  // full file text, for diagnostics
  std::optional<rexp::RecipeError> recipe;      // Status::Recipe
  std::string error_message;                    // Status::Parse
  std::optional<SourceSpan> error_span;         // Status::Parse, when located
  std::vector<DefinitionSummary> definitions;   // completed before any error

  int exit_code() const;  // 0 ok, 1 recipe error, 2 parse or I/O error
};

RunOutcome check_source(std::string_view text, const std::string& file_name,
                        const CliConfig& cfg);
RunOutcome check_file(const std::string& path, const CliConfig& cfg);

// file:line:col, the offending line, a caret underline, then the message.
std::string render_text(const RunOutcome& outcome, bool quiet);
std::string render_json(const std::vector<RunOutcome>& outcomes);

struct SessionTranscript {
  std::vector<RunOutcome> runs;
  std::string text;  // rendered transcript in the configured format
};

// Check successive versions of a program, concatenating per-version output.
// Each version starts with a "== <file>" marker line in text mode.
SessionTranscript replay_session(const std::vector<std::string>& version_paths,
                                 const CliConfig& cfg);

struct RunResult {
  std::string output;
  int exit_code = 0;
};

// Whole-run driver behind the executable: checks or replays cfg.inputs and
// produces everything that should reach stdout.
RunResult run(const CliConfig& cfg);

}  // namespace rexp::cli
