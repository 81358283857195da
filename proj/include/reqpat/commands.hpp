#pragma once

#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "reqpat/clock.hpp"
#include "reqpat/emit.hpp"
#include "reqpat/harness.hpp"
#include "reqpat/picnic.hpp"
#include "reqpat/semantics.hpp"
#include "reqpat/suite.hpp"

namespace reqpat::cli {

/// Process exit codes.
enum ExitStatus : int {
  kAllHold = 0,
  kViolation = 1,
  kUsageError = 2,
  kVacuous = 3,
};

/// Built-in systems under test, by name. Returns null for unknown names.
inline std::unique_ptr<Sut> make_sut(std::string_view name) {
  if (name == "clock") return std::make_unique<clock::Clock>();
  return nullptr;
}

namespace detail {

inline std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loads a suite or reports why not; nullopt means exit 2.
inline std::optional<Suite> open_suite(const std::string& path, std::ostream& err) {
  auto text = slurp(path);
  if (!text) {
    err << "error: cannot read suite file '" << path << "'\n";
    return std::nullopt;
  }
  try {
    return load_suite(*text);
  } catch (const LoadError& e) {
    static constexpr const char* kinds[] = {"DuplicateDefinition", "UnknownReference", "MalformedPattern",
                                            "Malformed"};
    err << "error: " << path << ": " << kinds[static_cast<int>(e.kind())];
    if (!e.subject().empty()) err << "(" << e.subject() << ")";
    err << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

inline ltl::Formula named_prop(const Suite& suite, const Condition& c) {
  if (auto n = suite.name_of(c)) return ltl::prop(*n);
  return to_formula(c);
}

}  // namespace detail

/// Exit status summarising a list of verdicts.
inline int exit_status(const std::vector<Verdict>& verdicts) {
  bool any_vacuous = false;
  for (const auto& v : verdicts) {
    if (!holds(v)) return kViolation;
    any_vacuous = any_vacuous || vacuous(v);
  }
  return any_vacuous ? kVacuous : kAllHold;
}

inline std::string describe(const Verdict& v) {
  return std::visit(overloaded{
                        [](const Holds& h) -> std::string { return h.vacuous ? "HOLDS (vacuous)" : "HOLDS"; },
                        [](const Fails& f) {
                          return "FAILS at segment " + std::to_string(f.segment_index) + " position " +
                                 std::to_string(f.position);
                        },
                        [](const Inconclusive& i) { return "INCONCLUSIVE (" + i.reason + ")"; },
                    },
                    v);
}

inline nlohmann::ordered_json to_json(const std::string& name, const Verdict& v) {
  nlohmann::ordered_json j;
  j["name"] = name;
  std::visit(overloaded{
                 [&](const Holds& h) {
                   j["verdict"] = "holds";
                   j["vacuous"] = h.vacuous;
                 },
                 [&](const Fails& f) {
                   j["verdict"] = "fails";
                   j["vacuous"] = false;
                   j["segment"] = f.segment_index;
                   j["position"] = f.position;
                   j["reason"] = f.reason;
                 },
                 [&](const Inconclusive& i) {
                   j["verdict"] = "inconclusive";
                   j["vacuous"] = false;
                   j["reason"] = i.reason;
                 },
             },
             v);
  return j;
}

/// Trace-mode check of every requirement in a suite.
inline int cmd_check(const std::string& suite_path, const std::string& trace_path, bool json, std::ostream& out,
                     std::ostream& err) {
  auto suite = detail::open_suite(suite_path, err);
  if (!suite) return kUsageError;
  auto text = detail::slurp(trace_path);
  if (!text) {
    err << "error: cannot read trace file '" << trace_path << "'\n";
    return kUsageError;
  }
  Trace trace;
  try {
    trace = load_trace(*text);
  } catch (const TraceError& e) {
    err << "error: " << trace_path << ": " << e.what() << "\n";
    return kUsageError;
  }

  std::vector<Verdict> verdicts;
  auto report = nlohmann::ordered_json::array();
  for (const auto& req : suite->requirements()) {
    verdicts.push_back(check(req, trace));
    if (json)
      report.push_back(to_json(req.name, verdicts.back()));
    else
      out << req.name << ": " << describe(verdicts.back()) << "\n";
  }
  if (json) out << report.dump(2) << "\n";
  return exit_status(verdicts);
}

/// Drives a built-in SUT through each drivable requirement in suite order:
/// global existence by establishment, global response by strict
/// response verification. Other requirements are skipped.
inline int cmd_drive(const std::string& suite_path, const std::string& sut_name, std::size_t bound, bool json,
                     std::ostream& out, std::ostream& err) {
  auto sut = make_sut(sut_name);
  if (!sut) {
    err << "error: unknown SUT '" << sut_name << "'\n";
    return kUsageError;
  }
  auto suite = detail::open_suite(suite_path, err);
  if (!suite) return kUsageError;

  sut->reset();
  int status = kAllHold;
  auto report = nlohmann::ordered_json::array();
  for (const auto& req : suite->requirements()) {
    std::optional<DriveOutcome> outcome;
    if (std::holds_alternative<scope::Globally>(req.scope)) {
      if (const auto* e = std::get_if<pattern::Existence>(&req.pattern))
        outcome = establish(*sut, e->p, bound);
      else if (const auto* r = std::get_if<pattern::Response>(&req.pattern))
        outcome = drive_verify_response(*sut, r->p, r->s, bound);
    }

    nlohmann::ordered_json row;
    row["name"] = req.name;
    if (!outcome) {
      row["verdict"] = "skipped";
      row["vacuous"] = false;
    } else if (const auto* reached = std::get_if<drive::Reached>(&*outcome)) {
      row["verdict"] = "reached";
      row["vacuous"] = false;
      row["steps"] = reached->steps;
    } else {
      status = kViolation;
      if (const auto* nr = std::get_if<drive::NotReached>(&*outcome)) {
        row["verdict"] = "not_reached";
        row["vacuous"] = false;
        row["steps"] = nr->bound;
      } else {
        row["verdict"] = "precondition_violation";
        row["vacuous"] = false;
        row["tag"] = std::get<drive::PreconditionViolation>(*outcome).tag;
      }
    }

    if (json)
      report.push_back(std::move(row));
    else
      out << req.name << ": " << (outcome ? to_string(*outcome) : "SKIPPED (trace-mode only)") << "\n";
  }
  if (json) out << report.dump(2) << "\n";
  return status;
}

inline int cmd_render(const std::string& suite_path, std::ostream& out, std::ostream& err) {
  auto suite = detail::open_suite(suite_path, err);
  if (!suite) return kUsageError;
  out << render_suite_report(*suite);
  return kAllHold;
}

/// `NAME: formula` per requirement; named conditions appear as propositions.
/// Requirements without an LTL form are reported in place.
inline int cmd_emit(const std::string& suite_path, std::ostream& out, std::ostream& err) {
  auto suite = detail::open_suite(suite_path, err);
  if (!suite) return kUsageError;
  const Suite& s = *suite;
  const ConditionRenderer render = [&s](const Condition& c) { return detail::named_prop(s, c); };
  for (const auto& req : s.requirements()) {
    try {
      const auto formula = ltl::print_formula(emit_ltl(req, render));
      out << req.name << ": " << formula << "\n";
    } catch (const UnsupportedPattern& e) {
      out << req.name << ": unsupported (" << e.what() << ")\n";
    }
  }
  return kAllHold;
}

inline int cmd_report(const std::string& suite_path, std::ostream& out, std::ostream& err) {
  auto suite = detail::open_suite(suite_path, err);
  if (!suite) return kUsageError;
  out << traceability_report(*suite);
  return kAllHold;
}

/// The clock walkthrough: verifying STATEMENT_1_1 on a fresh clock violates
/// p_holds; establishing STATEMENT_0 first makes the verification pass.
inline int cmd_demo(const std::string& sut_name, std::ostream& out, std::ostream& err) {
  if (sut_name != "clock") {
    err << "error: no demo for SUT '" << sut_name << "'\n";
    return kUsageError;
  }
  const Suite suite = clock::builtin_suite();
  const Requirement& s0 = *suite.find_requirement("STATEMENT_0");
  const Requirement& s11 = *suite.find_requirement("STATEMENT_1_1");
  const auto names = names_from(suite);
  const auto& existence = std::get<pattern::Existence>(s0.pattern);
  const auto& response = std::get<pattern::Response>(s11.pattern);
  constexpr std::size_t bound = clock::kDayMinutes;

  clock::Clock c;
  c.reset();
  out << "clock started at " << c.display() << "\n";
  out << render_requirement(s0, names).str() << "\n";
  out << render_requirement(s11, names).str() << "\n\n";

  out << "[1] verify STATEMENT_1_1 on the fresh clock\n";
  auto first = drive_verify_response(c, response.p, response.s, bound);
  if (const auto* v = std::get_if<drive::PreconditionViolation>(&first))
    out << "    precondition violated: " << v->tag << " (clock at " << c.display() << ")\n";
  else
    out << "    unexpected: " << to_string(first) << "\n";

  out << "[2] establish STATEMENT_0\n";
  auto second = establish(c, existence.p, bound);
  out << "    STATEMENT_0: " << to_string(second) << " (clock at " << c.display() << ")\n";

  out << "[3] verify STATEMENT_1_1\n";
  auto third = drive_verify_response(c, response.p, response.s, bound);
  out << "    STATEMENT_1_1: " << to_string(third) << " (clock at " << c.display() << ")\n";

  const bool as_expected = std::holds_alternative<drive::PreconditionViolation>(first) &&
                           std::holds_alternative<drive::Reached>(second) &&
                           std::holds_alternative<drive::Reached>(third);
  return as_expected ? kAllHold : kViolation;
}

}  // namespace reqpat::cli
