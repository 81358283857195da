// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "test_support.hpp"

using namespace reqpat;
using testing::atom;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << ": " << detail << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> atoms_of(const Requirement& req) {
  std::set<std::string> names;
  for (const auto& c : conditions_of(req.pattern)) names.insert(c.atom());
  for (const auto& c : conditions_of(req.scope)) names.insert(c.atom());
  return {names.begin(), names.end()};
}

// Counts traces of length 1..5 over the requirement's atoms where the direct
// checker and the emitted formula disagree.
std::pair<long, long> disagreements(const Requirement& req, const ltl::Formula& f) {
  const ltl::CompiledFormula compiled(f);
  long bad = 0, total = 0;
  testing::for_each_trace(atoms_of(req), 1, 5, [&](const Trace& t) {
    ++total;
    if (holds(check(req, t)) != compiled.eval(t, 0)) ++bad;
  });
  return {bad, total};
}

void oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const Condition p = atom("p"), s = atom("s"), q = atom("q"), r = atom("r");
  const std::vector<Pattern> patterns = {
      pattern::Absence{p},           pattern::Universality{p},           pattern::Existence{p},
      pattern::BoundedExistence{p, 0}, pattern::BoundedExistence{p, 1}, pattern::BoundedExistence{p, 2},
      pattern::Precedence{s, p},     pattern::Response{p, s, false},
  };
  const std::vector<Scope> scopes = {scope::Globally{}, scope::Before{r}, scope::After{q}, scope::Between{q, r},
                                     scope::AfterUntil{q, r}};
  long bad = 0, total = 0, combos = 0;
  std::string first;
  for (const auto& pat : patterns)
    for (const auto& sc : scopes) {
      const Requirement req{"R", pat, sc, {}};
      const auto [b, n] = disagreements(req, emit_ltl(req));
      if (b && first.empty()) first = " first in " + ltl::print_formula(emit_ltl(req));
      bad += b;
      total += n;
      ++combos;
    }
  std::ostringstream d;
  d << combos << " combinations, " << total << " traces, " << bad << " disagreements" << first << ", "
    << seconds_since(t0) << " s";
  report(1, "oracle equivalence", bad == 0 && seconds_since(t0) < 300, d.str());
}

void strict_response() {
  const Requirement req{"R", pattern::Response{atom("p"), atom("s"), true}, scope::Globally{}, {}};
  const auto formula = ltl::parse("[](p -> X<>s)");
  const auto [bad, total] = disagreements(req, formula);
  const bool emitted = emit_ltl(req) == formula;
  report(2, "strict response", bad == 0 && emitted,
         std::to_string(total) + " traces, " + std::to_string(bad) + " disagreements, emitted form " +
             (emitted ? "matches" : "differs"));
}

// Brute force over position tuples; shares nothing with the checker.
bool chain_exists(const std::vector<std::string>& chain, const Trace& t, std::size_t from, std::size_t to) {
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t idx, std::size_t start) {
    if (idx == chain.size()) return true;
    for (std::size_t k = start; k < to; ++k)
      if (t[k].contains(chain[idx]) && go(idx + 1, k + 1)) return true;
    return false;
  };
  return go(0, from);
}

struct Outcome {
  bool ok;
  bool vacuous;
  std::size_t position;
  bool operator==(const Outcome&) const = default;
};

Outcome response_chain_oracle(const std::vector<std::string>& chain, const Trace& t, Segment seg) {
  bool triggered = false;
  for (std::size_t k = seg.begin; k < seg.end; ++k) {
    if (!t[k].contains("p")) continue;
    triggered = true;
    if (!chain_exists(chain, t, k + 1, seg.end)) return {false, false, k};
  }
  return {true, !triggered, 0};
}

Outcome precedence_chain_oracle(const std::vector<std::string>& chain, const Trace& t, Segment seg) {
  for (std::size_t k = seg.begin; k < seg.end; ++k) {
    if (!t[k].contains("p")) continue;
    if (!chain_exists(chain, t, seg.begin, k)) return {false, false, k};
    return {true, false, 0};
  }
  return {true, true, 0};
}

Outcome outcome_of(const Verdict& v) {
  if (const auto* f = std::get_if<Fails>(&v)) return {false, false, f->position};
  return {holds(v), vacuous(v), 0};
}

void chain_patterns() {
  const std::vector<std::string> atoms = {"a", "b", "p"};
  std::vector<std::vector<std::string>> chains;
  for (const auto& x : atoms) {
    chains.push_back({x});
    for (const auto& y : atoms) chains.push_back({x, y});
  }
  long bad = 0, cases = 0;
  for (const auto& names : chains) {
    std::vector<Condition> chain;
    for (const auto& n : names) chain.push_back(Condition::ref(n));
    const Pattern rc = pattern::ResponseChain{atom("p"), chain};
    const Pattern pc = pattern::PrecedenceChain{chain, atom("p")};
    testing::for_each_trace(atoms, 0, 5, [&](const Trace& t) {
      for (std::size_t i = 0; i <= t.size(); ++i)
        for (std::size_t j = i; j <= t.size(); ++j) {
          const Segment seg{i, j};
          cases += 2;
          if (!(outcome_of(evaluate_pattern(rc, t, seg)) == response_chain_oracle(names, t, seg))) ++bad;
          if (!(outcome_of(evaluate_pattern(pc, t, seg)) == precedence_chain_oracle(names, t, seg))) ++bad;
        }
    });
  }
  report(3, "chain patterns", bad == 0,
         std::to_string(chains.size()) + " chains, " + std::to_string(cases) + " segment checks, " +
             std::to_string(bad) + " disagreements");
}

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(REQPAT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

void clock_scenario() {
  const auto t0 = std::chrono::steady_clock::now();
  const Run a = run_cli("demo clock");
  const double elapsed = seconds_since(t0);
  const Run b = run_cli("demo clock");
  const auto p = a.out.find("precondition violated: p_holds");
  const auto s0 = a.out.find("STATEMENT_0: Reached(1440)");
  const auto s11 = a.out.find("STATEMENT_1_1: Reached(1440)");
  const bool ordered = p != std::string::npos && s0 != std::string::npos && s11 != std::string::npos && p < s0 &&
                       s0 < s11;
  const bool deterministic = a.out == b.out && a.status == b.status;
  std::ostringstream d;
  d << "p_holds -> Reached(1440) -> Reached(1440) " << (ordered ? "in order" : "NOT in order") << ", "
    << (deterministic ? "deterministic" : "nondeterministic") << ", exit " << a.status << ", " << elapsed << " s";
  report(4, "clock scenario", ordered && deterministic && a.status == 0 && elapsed < 1.0, d.str());
}

void picnic_fidelity() {
  Suite suite = clock::builtin_suite();
  Requirement req = *suite.find_requirement("STATEMENT_1_1");
  std::get<pattern::Response>(req.pattern).strict = false;
  const std::string line = render_requirement(req, names_from(suite)).str();
  report(5, "picnic fidelity", line == "STATEMENT_1_1: midnight responds to midnight globally", "\"" + line + "\"");
}

ltl::Formula random_formula(std::mt19937& rng, int depth) {
  static const char* names[] = {"p", "q", "r", "s", "at_2400"};
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 12 : 2);
  std::uniform_int_distribution<int> name(0, 4);
  auto sub = [&] { return random_formula(rng, depth - 1); };
  switch (pick(rng)) {
    case 0: return ltl::Formula::top();
    case 1: return ltl::Formula::bottom();
    case 2: return ltl::prop(names[name(rng)]);
    case 3: return !sub();
    case 4: return ltl::next(sub());
    case 5: return ltl::weak_next(sub());
    case 6: return ltl::eventually(sub());
    case 7: return ltl::always(sub());
    case 8: return sub() && sub();
    case 9: return sub() || sub();
    case 10: return ltl::implies(sub(), sub());
    case 11: return ltl::until(sub(), sub());
    default: return ltl::weak_until(sub(), sub());
  }
}

void round_trips() {
  std::mt19937 rng(2024);
  long formula_bad = 0;
  const int formulas = 10000;
  for (int i = 0; i < formulas; ++i) {
    const auto f = random_formula(rng, 5);
    try {
      if (!(ltl::parse(ltl::print_formula(f)) == f)) ++formula_bad;
    } catch (const SyntaxError&) {
      ++formula_bad;
    }
  }
  long trace_bad = 0;
  const int traces = 1000;
  for (int i = 0; i < traces; ++i) {
    const Trace t = testing::random_trace(rng, {"p", "q", "at_2400", "_x9"}, 12);
    if (!(load_trace(write_trace(t)) == t)) ++trace_bad;
  }
  const Suite suite = clock::builtin_suite();
  const bool suite_ok = load_suite(save_suite(suite)) == suite;
  std::ostringstream d;
  d << formulas << " formulas (" << formula_bad << " mismatches), " << traces << " traces (" << trace_bad
    << " mismatches), clock suite " << (suite_ok ? "identical" : "differs");
  report(6, "round trips", formula_bad == 0 && trace_bad == 0 && suite_ok, d.str());
}

const std::filesystem::path work_dir = std::filesystem::temp_directory_path() / "reqpat_acceptance";

void duplicate_definition() {
  const std::string text =
      R"({"conditions": {"midnight": "at_2400", "midnight": "at_0000"}, "requirements": []})";
  bool rejected = false;
  try {
    load_suite(text);
  } catch (const LoadError& e) {
    rejected = e.kind() == LoadError::Kind::DuplicateDefinition && e.subject() == "midnight";
  }
  const auto suite = work_dir / "dup.json";
  const auto trace = work_dir / "one.jsonl";
  testing::write_file(suite, text);
  testing::write_file(trace, "[]\n");
  const int status = run_cli("check --suite " + suite.string() + " --trace " + trace.string()).status;
  report(7, "duplicate definition", rejected && status == 2,
         std::string(rejected ? "DuplicateDefinition(midnight)" : "not rejected") + ", CLI exit " +
             std::to_string(status));
}

void clock_invariants() {
  using namespace clock;
  const std::regex shape("^([01][0-9]|2[0-4]):[0-5][0-9]$");
  int bad_display = 0, bad_cycle = 0, midnights = 0;
  for (int m = 0; m <= kDayMinutes; ++m) {
    const ClockState start(m);
    if (!std::regex_match(clock_display(start), shape)) ++bad_display;
    midnights += start.is_midnight();
    // 00:00 and 24:00 are the same instant, so they compare as one minute.
    const auto instant = [](ClockState c) { return c.minute() == 0 ? kDayMinutes : c.minute(); };
    ClockState s = start.next();
    int len = 1;
    while (instant(s) != instant(start) && len <= 2 * kDayMinutes) {
      s = s.next();
      ++len;
    }
    if (len != kDayMinutes) ++bad_cycle;
  }
  std::ostringstream d;
  d << kDayMinutes + 1 << " states, " << bad_display << " display mismatches, " << bad_cycle
    << " wrong cycle lengths, " << midnights << " midnight state(s)";
  report(8, "clock invariants", bad_display == 0 && bad_cycle == 0 && midnights == 1, d.str());
}

void vacuity() {
  const auto suite = work_dir / "before.json";
  const auto trace = work_dir / "no_r.jsonl";
  testing::write_file(suite, R"({"conditions": {"p": "p", "r": "r"}, "requirements": [
    {"name": "R", "pattern": {"type": "absence", "p": "p"}, "scope": {"type": "before", "r": "r"}}]})");
  testing::write_file(trace, "[\"p\"]\n[]\n[\"p\",\"q\"]\n");
  const Run r = run_cli("check --suite " + suite.string() + " --trace " + trace.string());
  const bool ok = r.out == "R: HOLDS (vacuous)\n" && r.status == 3;
  report(9, "vacuity", ok, "output \"" + r.out.substr(0, r.out.find('\n')) + "\", CLI exit " + std::to_string(r.status));
}

}  // namespace

int main() {
  std::filesystem::create_directories(work_dir);
  oracle_equivalence();
  strict_response();
  chain_patterns();
  clock_scenario();
  picnic_fidelity();
  round_trips();
  duplicate_definition();
  clock_invariants();
  vacuity();
  std::filesystem::remove_all(work_dir);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}
