#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rees/cli.hpp"

namespace {

using rees::cli::JobSpec;
using rees::cli::Report;

struct Options {
  JobSpec job;
  std::vector<std::string> forms;
  std::string batch;
};

void configure(CLI::App& app, Options& o, bool allow_batch) {
  app.add_option("command", o.job.command, "mu-basis | implicitize | rees | e1 | birational | cm-check | verify | demo")
      ->check(CLI::IsMember(rees::cli::commands()));
  app.add_option("forms", o.forms, "three forms in s, t")->expected(0, 3);
  app.add_option("--field", o.job.field, "q or fp:<p>")->capture_default_str();
  app.add_option("--seed", o.job.seed, "seed for random reductions")->capture_default_str();
  app.add_flag("--json", o.job.json, "emit one JSON document per job");
  app.add_flag("--verify", o.job.verify, "recheck results against the Groebner oracles");
  if (allow_batch) app.add_option("--batch", o.batch, "file with one job per line");
}

// Checks arity; returns an error report or nothing.
bool complete(const Options& o, JobSpec& job, Report& error) {
  job = o.job;
  if (job.command.empty()) {
    error.doc["error"] = "missing command";
  } else if (job.command == "demo") {
    return true;
  } else if (o.forms.size() != 3) {
    error.doc["error"] = "expected exactly 3 forms, got " + std::to_string(o.forms.size());
  } else {
    std::copy(o.forms.begin(), o.forms.end(), job.forms.begin());
    return true;
  }
  error.exit_code = rees::cli::kInputError;
  return false;
}

void emit(const Report& r, bool json, bool compact) {
  if (r.doc.contains("error")) std::cerr << "error: " << r.doc["error"].get<std::string>() << "\n";
  if (json) {
    std::cout << (compact ? r.doc.dump() : r.doc.dump(2)) << "\n";
  } else {
    rees::cli::print_text(std::cout, r.doc);
  }
}

int run_batch(const Options& outer) {
  std::ifstream in(outer.batch);
  if (!in) {
    std::cerr << "error: cannot open batch file '" << outer.batch << "'\n";
    return rees::cli::kInputError;
  }
  int status = rees::cli::kSuccess;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    Report report;
    try {
      auto words = rees::cli::tokenize(text);
      if (words.empty()) continue;
      Options o;
      o.job = outer.job;
      CLI::App app;
      configure(app, o, false);
      std::reverse(words.begin(), words.end());
      app.parse(words);
      JobSpec job;
      if (complete(o, job, report)) {
        job.line = line;
        report = rees::cli::run(job);
      }
    } catch (const std::exception& e) {
      report.exit_code = rees::cli::kInputError;
      report.doc["error"] = "line " + std::to_string(line) + ": " + e.what();
    }
    if (!outer.job.json && !text.empty()) std::cout << "# " << text << "\n";
    emit(report, outer.job.json, true);
    status = std::max(status, report.exit_code);
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees algebras of rational plane curves"};
  Options o;
  configure(app, o, true);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : rees::cli::kInputError;
  }
  if (!o.batch.empty()) return run_batch(o);
  Report report;
  JobSpec job;
  if (complete(o, job, report)) report = rees::cli::run(job);
  emit(report, job.json || o.job.json, false);
  return report.exit_code;
}
