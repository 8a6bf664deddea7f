#ifndef REES_CLI_HPP
#define REES_CLI_HPP

// Job dispatch for the command-line front end. A job names a command, a field
// and three forms; run() returns a JSON report and an exit status.

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "rees/hilbert.hpp"
#include "rees/rees_ideal.hpp"
#include "rees/sylvester.hpp"
#include "rees/syzygy.hpp"
#include "rees/text.hpp"

namespace rees::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kUnsupported = 2, kVerificationFailed = 3 };

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"mu-basis", "implicitize", "rees", "e1",
                                              "birational", "cm-check", "verify", "demo"};
  return names;
}

struct JobSpec {
  std::string command;
  std::array<std::string, 3> forms;
  std::string field = "q";
  std::uint64_t seed = 1;
  bool json = false;
  bool verify = false;
  std::size_t line = 1;  // source line for parse diagnostics (batch mode)
};

struct Report {
  nlohmann::json doc;
  int exit_code = kSuccess;
};

/// "q" or "fp:<p>"; throws std::invalid_argument otherwise. Returns 0 for q.
inline std::uint32_t parse_field(const std::string& spec) {
  if (spec == "q") return 0;
  if (spec.rfind("fp:", 0) == 0 && spec.size() > 3) {
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(spec.substr(3), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == spec.size() - 3) {
      PrimeField check(static_cast<std::uint32_t>(p));
      return check.p;
    }
  }
  throw std::invalid_argument("field must be 'q' or 'fp:<prime>', got '" + spec + "'");
}

namespace detail {

template <class Field>
nlohmann::json strings(const std::vector<Polynomial<Field>>& ps) {
  auto out = nlohmann::json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

template <class Field>
nlohmann::json matrix_json(const HilbertBurchMatrix<Field>& phi) {
  auto cols = nlohmann::json::array();
  for (std::size_t j = 0; j < 2; ++j) {
    const auto& c = phi.column(j);
    cols.push_back(strings<Field>({c[0], c[1], c[2]}));
  }
  return cols;
}

template <class Field>
nlohmann::json generators_json(const EliminationResult<Field>& L) {
  auto out = nlohmann::json::array();
  for (const auto& g : L.generators) out.push_back({{"label", g.label}, {"form", to_string(g.form)}});
  return out;
}

template <class Field>
struct Context {
  Ring<Field> ring;
  std::array<Polynomial<Field>, 3> forms;
  HilbertBurchMatrix<Field> phi;
  SymmetricForms<Field> sf;
};

template <class Field>
Context<Field> load(const JobSpec& job, Field field) {
  auto ring = make_rees_ring(field);
  std::array<Polynomial<Field>, 3> fs;
  for (std::size_t i = 0; i < 3; ++i) fs[i] = parse_polynomial(job.forms[i], ring, job.line);
  auto phi = mu_basis(fs[0], fs[1], fs[2]);
  auto sf = symmetric_algebra_forms(phi);
  return {ring, fs, phi, sf};
}

/// Oracle checks on a pipeline result: F against the eliminant of the saturation,
/// and L against the saturation itself where the pipeline claims the whole ideal.
template <class Field>
nlohmann::json verify_pipeline(const Context<Field>& ctx, const EliminationResult<Field>& L, bool& ok) {
  auto M = rees_ideal_oracle(ctx.sf);
  auto E = implicit_equation_by_elimination(M);
  unsigned d = ctx.sf.degree;
  unsigned m = d / E.total_degree();
  bool f_ok = d % E.total_degree() == 0 && L.implicit_equation == E.pow(m).monic();
  nlohmann::json out{{"implicit_equation", f_ok}, {"map_degree", m}};
  bool claims_ideal = L.kind == PipelineCase::Deg4Balanced || L.kind == PipelineCase::Mu1Chain ||
                      L.kind == PipelineCase::Deg5Mu2;
  if (claims_ideal && m == 1) {
    bool l_ok = verify_candidate(L, M);
    out["rees_ideal"] = l_ok;
    ok = f_ok && l_ok;
  } else {
    out["rees_ideal"] = nullptr;
    ok = f_ok;
  }
  return out;
}

template <class Field>
void run_command(const JobSpec& job, const Context<Field>& ctx, Report& report) {
  auto& doc = report.doc;
  const std::string& cmd = job.command;
  if (cmd == "mu-basis") {
    if (job.verify) {
      bool ok = is_syzygy_matrix(ctx.phi, ctx.forms);
      doc["verified"] = ok;
      if (!ok) report.exit_code = kVerificationFailed;
    }
    return;
  }
  if (cmd == "implicitize" || cmd == "verify" || cmd == "rees") {
    auto L = implicitize(ctx.sf);
    doc["case"] = case_name(L.kind);
    doc["generators"] = generators_json(L);
    doc["implicit_equation"] = to_string(L.implicit_equation);
    if (cmd == "rees") {
      auto M = rees_ideal_oracle(ctx.sf);
      doc["oracle"] = strings(M.basis(MonomialOrder::grevlex()).elements());
    }
    if (job.verify || cmd == "verify") {
      bool ok = false;
      doc["verification"] = verify_pipeline(ctx, L, ok);
      doc["verified"] = ok;
      if (!ok) report.exit_code = kVerificationFailed;
    }
    return;
  }
  if (cmd == "e1") {
    auto h = e1(ctx.forms, job.seed);
    doc["e0"] = h.e0;
    doc["e1"] = h.e1;
    doc["e1_power"] = e1_power_of_maximal(ctx.sf.degree, 2);
    doc["reduction_number"] = h.r;
    doc["length"] = h.length;
    if (job.verify) {
      bool ok = e1(ctx.forms, job.seed + 1).e1 == h.e1;
      doc["verified"] = ok;
      if (!ok) report.exit_code = kVerificationFailed;
    }
    return;
  }
  if (cmd == "birational") {
    auto v = is_birational(ctx.forms, job.seed);
    doc["birational"] = v.birational;
    doc["e1"] = v.e1;
    doc["e1_power"] = v.e1_power;
    doc["implicit_degree"] = *v.implicit_degree;
    doc["map_degree"] = *v.map_degree;
    doc["implicit_equation"] = to_string(implicit_equation_by_interpolation(ctx.forms, ctx.ring));
    if (job.verify) {
      unsigned fiber = map_degree_by_fiber(ctx.forms, job.seed);
      bool ok = fiber == *v.map_degree && v.birational == (fiber == 1);
      doc["verified"] = ok;
      if (!ok) report.exit_code = kVerificationFailed;
    }
    return;
  }
  if (cmd == "cm-check") {
    doc["cm"] = is_rees_cm(ctx.phi);
    auto contents = column_contents(ctx.phi);
    doc["contents"] = {strings(contents[0]), strings(contents[1])};
    if (job.verify) {
      std::mt19937_64 rng(job.seed);
      try {
        auto v = cm_cross_check(ctx.forms, rng);
        doc["reduction_number"] = v.reduction_number;
        doc["verified"] = true;
      } catch (const InconsistentVerdict& e) {
        doc["verified"] = false;
        doc["error"] = e.what();
        report.exit_code = kVerificationFailed;
      }
    }
    return;
  }
  throw std::invalid_argument("unknown command '" + cmd + "'");
}

}  // namespace detail

template <class Field>
Report run_in(const JobSpec& job, Field field) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  auto& doc = report.doc;
  doc["command"] = job.command;
  doc["field"] = field.name();
  doc["seed"] = job.seed;
  auto ctx = detail::load(job, field);
  doc["input"] = detail::strings<Field>({ctx.forms.begin(), ctx.forms.end()});
  doc["degree"] = ctx.sf.degree;
  doc["mu"] = ctx.sf.mu;
  doc["mu_basis"] = detail::matrix_json(ctx.phi);
  detail::run_command(job, ctx, report);
  for (const char* key : {"case", "generators", "implicit_equation", "e0", "e1", "e1_power", "birational", "cm",
                          "verified"}) {
    if (!doc.contains(key)) doc[key] = nullptr;
  }
  doc["millis"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Worked examples: the two monomial quartics, the conic, and a balanced quartic.
inline std::vector<JobSpec> demo_jobs(const JobSpec& base) {
  std::vector<JobSpec> out;
  const std::vector<std::array<std::string, 3>> inputs{{"s^4", "s^3*t", "t^4"},
                                                      {"s^4", "s^2*t^2", "t^4"},
                                                      {"s^2", "s*t", "t^2"},
                                                      {"s^4 + t^4", "s^3*t", "s*t^3 + s^2*t^2"}};
  for (const auto& in : inputs) {
    for (const char* cmd : {"implicitize", "birational", "cm-check"}) {
      JobSpec job = base;
      job.command = cmd;
      job.forms = in;
      out.push_back(job);
    }
  }
  return out;
}

/// Runs one job; every failure becomes an error report with the matching exit code.
inline Report run(const JobSpec& job) {
  Report report;
  try {
    if (job.command == "demo") {
      report.doc["command"] = "demo";
      report.doc["cases"] = nlohmann::json::array();
      for (const auto& sub : demo_jobs(job)) {
        auto r = run(sub);
        report.doc["cases"].push_back(r.doc);
        report.exit_code = std::max(report.exit_code, r.exit_code);
      }
      return report;
    }
    std::uint32_t p = parse_field(job.field);
    return p == 0 ? run_in(job, RationalField{}) : run_in(job, PrimeField(p));
  } catch (const UnsupportedStratum& e) {
    report.exit_code = kUnsupported;
    report.doc["error"] = e.what();
  } catch (const ParseError& e) {
    report.exit_code = kInputError;
    report.doc["error"] = e.what();
  } catch (const InvalidParametrization& e) {
    report.exit_code = kInputError;
    report.doc["error"] = e.what();
  } catch (const std::invalid_argument& e) {
    report.exit_code = kInputError;
    report.doc["error"] = e.what();
  }
  report.doc["command"] = job.command;
  report.doc["input"] = job.forms;
  return report;
}

namespace detail {

inline void print_value(std::ostream& out, const std::string& key, const nlohmann::json& v) {
  out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

}  // namespace detail

/// Plain-text rendering of a report.
inline void print_text(std::ostream& out, const nlohmann::json& doc) {
  if (doc.contains("cases")) {
    for (const auto& c : doc["cases"]) {
      print_text(out, c);
      out << "\n";
    }
    return;
  }
  if (doc.contains("error")) return;  // diagnostics go to stderr
  if (doc.contains("input")) {
    out << "input: ";
    for (std::size_t i = 0; i < doc["input"].size(); ++i) out << (i ? ", " : "") << doc["input"][i].get<std::string>();
    out << "\n";
  }
  for (const char* key : {"degree", "mu"}) {
    if (!doc.value(key, nlohmann::json()).is_null()) detail::print_value(out, key, doc[key]);
  }
  if (doc.contains("mu_basis")) {
    for (std::size_t j = 0; j < 2; ++j) {
      const auto& c = doc["mu_basis"][j];
      out << "column " << j + 1 << ": (" << c[0].get<std::string>() << ", " << c[1].get<std::string>() << ", "
          << c[2].get<std::string>() << ")\n";
    }
  }
  auto present = [&](const char* key) { return doc.contains(key) && !doc[key].is_null(); };
  if (present("case")) detail::print_value(out, "case", doc["case"]);
  if (present("generators")) {
    for (const auto& g : doc["generators"]) out << g["label"].get<std::string>() << " = " << g["form"].get<std::string>() << "\n";
  }
  for (const char* key : {"implicit_equation", "e0", "e1", "e1_power", "reduction_number", "birational",
                          "implicit_degree", "map_degree", "cm", "verified"}) {
    if (present(key)) detail::print_value(out, key, doc[key]);
  }
  if (doc.contains("oracle")) {
    out << "oracle basis:\n";
    for (const auto& g : doc["oracle"]) out << "  " << g.get<std::string>() << "\n";
  }
}

/// Splits a batch line into words; double quotes group, backslash escapes inside quotes.
inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_word = false, quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '\\' && i + 1 < line.size()) {
        cur += line[++i];
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = in_word = true;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      if (in_word) out.push_back(cur), cur.clear(), in_word = false;
    } else if (c == '#' && !in_word) {
      break;
    } else {
      cur += c;
      in_word = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote");
  if (in_word) out.push_back(cur);
  return out;
}

}  // namespace rees::cli

#endif  // REES_CLI_HPP
