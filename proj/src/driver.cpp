#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rexp/driver.hpp"

namespace rexp::cli {

ValidationOptions CliConfig::validation_options() const {
  ValidationOptions opts;
  opts.gen.seed = seed;
  opts.gen.max_star_reps = max_star_reps;
  opts.default_gen_cases = default_gen_cases;
  return opts;
}

int RunOutcome::exit_code() const {
  switch (status) {
    case Status::Ok: return 0;
    case Status::Recipe: return 1;
    case Status::Parse: return 2;
  }
  return 2;
}

RunOutcome check_source(std::string_view text, const std::string& file_name,
                        const CliConfig& cfg) {
  RunOutcome out;
  out.file = file_name;
  out.source = std::string(text);
  try {
    std::vector<dsl::Definition> defs = dsl::parse_file(text, file_name);
    dsl::FileResult result = dsl::eval_file(defs, cfg.validation_options());
    if (auto* session = std::get_if<dsl::Session>(&result)) {
      out.status = RunOutcome::Status::Ok;
      for (const dsl::DefinitionReport& rep : session->reports) {
        out.definitions.push_back({file_name, rep.name, rep.report});
      }
    } else if (auto* recipe = std::get_if<RecipeError>(&result)) {
      out.status = RunOutcome::Status::Recipe;
      out.recipe = std::move(*recipe);
    } else {
      dsl::EvalError& err = std::get<dsl::EvalError>(result);
      out.status = RunOutcome::Status::Parse;
      out.error_message = std::move(err.message);
      out.error_span = std::move(err.span);
    }
  } catch (const dsl::ParseError& err) {
    out.status = RunOutcome::Status::Parse;
    out.error_message = err.message;
    out.error_span = err.span;
  }
  return out;
}

RunOutcome check_file(const std::string& path, const CliConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    RunOutcome out;
    out.status = RunOutcome::Status::Parse;
    out.file = path;
    out.error_message = "cannot open file: " + path;
    return out;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return check_source(buffer.str(), path, cfg);
}

namespace {

std::string line_at(const std::string& source, int line) {
  int current = 1;
  std::size_t start = 0;
  while (current < line) {
    std::size_t nl = source.find('\n', start);
    if (nl == std::string::npos) return "";
    start = nl + 1;
    ++current;
  }
  std::size_t end = source.find('\n', start);
  if (end == std::string::npos) end = source.size();
  return source.substr(start, end - start);
}

// The location line, the offending source line, and a caret underline that
// spans the expression (clamped to the end of the line).
std::string render_highlight(const std::string& source, const SourceSpan& span) {
  std::string out = to_string(span) + "\n";
  std::string line = line_at(source, span.line);
  out += line + "\n";
  int line_len = static_cast<int>(utf8_length(line));
  int indent = std::max(span.column - 1, 0);
  int avail = std::max(line_len - indent, 1);
  int width = std::clamp(span.length, 1, avail);
  out += std::string(static_cast<std::size_t>(indent), ' ');
  out.push_back('^');
  out += std::string(static_cast<std::size_t>(width - 1), '~');
  out.push_back('\n');
  return out;
}

const char* status_name(RunOutcome::Status status) {
  switch (status) {
    case RunOutcome::Status::Ok: return "ok";
    case RunOutcome::Status::Recipe: return "recipe-error";
    case RunOutcome::Status::Parse: return "parse-error";
  }
  return "parse-error";
}

nlohmann::ordered_json span_json(const SourceSpan& span) {
  return nlohmann::ordered_json{
      {"file", span.file}, {"line", span.line}, {"column", span.column}, {"length", span.length}};
}

nlohmann::ordered_json outcome_json(const RunOutcome& out) {
  nlohmann::ordered_json j;
  j["status"] = status_name(out.status);
  switch (out.status) {
    case RunOutcome::Status::Ok:
      j["step"] = nullptr;
      j["message"] = nullptr;
      j["span"] = nullptr;
      break;
    case RunOutcome::Status::Recipe:
      j["step"] = step_word(out.recipe->step);
      j["message"] = out.recipe->message;
      j["span"] = out.recipe->span ? span_json(*out.recipe->span) : nlohmann::ordered_json(nullptr);
      break;
    case RunOutcome::Status::Parse:
      j["step"] = nullptr;
      j["message"] = out.error_message;
      j["span"] = out.error_span ? span_json(*out.error_span) : nlohmann::ordered_json(nullptr);
      break;
  }
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const DefinitionSummary& def : out.definitions) {
    reports.push_back({{"name", def.name}, {"checks", def.report.total()}});
  }
  j["reports"] = std::move(reports);
  return j;
}

}  // namespace

std::string render_text(const RunOutcome& outcome, bool quiet) {
  switch (outcome.status) {
    case RunOutcome::Status::Ok: {
      if (quiet) return "";
      std::string out =
          outcome.file + ": " + std::to_string(outcome.definitions.size()) + " definitions OK\n";
      for (const DefinitionSummary& def : outcome.definitions) {
        out += "  " + def.name + ": " + std::to_string(def.report.total()) + " checks passed\n";
      }
      return out;
    }
    case RunOutcome::Status::Recipe: {
      std::string out;
      if (outcome.recipe->span) {
        out += render_highlight(outcome.source, *outcome.recipe->span);
      } else {
        out += outcome.file + "\n";
      }
      out += outcome.recipe->message + "\n";
      return out;
    }
    case RunOutcome::Status::Parse: {
      if (!outcome.error_span) {
        return outcome.file + ": error: " + outcome.error_message + "\n";
      }
      return render_highlight(outcome.source, *outcome.error_span) + outcome.error_message + "\n";
    }
  }
  return "";
}

std::string render_json(const std::vector<RunOutcome>& outcomes) {
  if (outcomes.size() == 1) {
    return outcome_json(outcomes.front()).dump(2) + "\n";
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const RunOutcome& out : outcomes) arr.push_back(outcome_json(out));
  return arr.dump(2) + "\n";
}

SessionTranscript replay_session(const std::vector<std::string>& version_paths,
                                 const CliConfig& cfg) {
  SessionTranscript transcript;
  std::string text;
  for (const std::string& path : version_paths) {
    RunOutcome out = check_file(path, cfg);
    if (cfg.format == OutputFormat::Text) {
      text += "== " + path + "\n" + render_text(out, cfg.quiet);
    }
    transcript.runs.push_back(std::move(out));
  }
  if (cfg.format == OutputFormat::Json) text = render_json(transcript.runs);
  transcript.text = std::move(text);
  return transcript;
}

RunResult run(const CliConfig& cfg) {
  if (cfg.replay) {
    SessionTranscript transcript = replay_session(cfg.inputs, cfg);
    int code = transcript.runs.empty() ? 0 : transcript.runs.back().exit_code();
    return {std::move(transcript.text), code};
  }
  std::vector<RunOutcome> outcomes;
  int code = 0;
  for (const std::string& path : cfg.inputs) {
    RunOutcome out = check_file(path, cfg);
    code = out.exit_code();
    outcomes.push_back(std::move(out));
    if (code != 0) break;  // one error at a time, across files too
  }
  std::string output;
  if (cfg.format == OutputFormat::Json) {
    output = render_json(outcomes);
  } else {
    for (const RunOutcome& out : outcomes) output += render_text(out, cfg.quiet);
  }
  return {std::move(output), code};
}

}  // namespace rexp::cli
