#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "reqpat/error.hpp"
#include "reqpat/pattern.hpp"

namespace reqpat {

/// Requirement names: `[A-Za-z_][A-Za-z0-9_]*`.
inline bool is_requirement_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

/// Named conditions plus an ordered list of requirements over them. Each
/// notion is defined once; a second definition is a contradiction.
class Suite {
 public:
  using NamedCondition = std::pair<std::string, Condition>;

  void define_condition(std::string name, Condition expr) {
    if (find_condition(name))
      throw LoadError(LoadError::Kind::DuplicateDefinition, name, "conditions." + name,
                      "condition '" + name + "' is defined more than once");
    conditions_.emplace_back(std::move(name), std::move(expr));
  }

  void add_requirement(Requirement req) {
    if (find_requirement(req.name))
      throw LoadError(LoadError::Kind::DuplicateDefinition, req.name, "requirements",
                      "requirement '" + req.name + "' is defined more than once");
    requirements_.push_back(std::move(req));
  }

  const std::vector<NamedCondition>& conditions() const noexcept { return conditions_; }
  const std::vector<Requirement>& requirements() const noexcept { return requirements_; }

  std::optional<Condition> find_condition(std::string_view name) const {
    for (const auto& [n, c] : conditions_)
      if (n == name) return c;
    return std::nullopt;
  }

  const Requirement* find_requirement(std::string_view name) const {
    for (const auto& r : requirements_)
      if (r.name == name) return &r;
    return nullptr;
  }

  /// Display name of a condition: the first definition structurally equal to it.
  std::optional<std::string> name_of(const Condition& c) const {
    for (const auto& [n, def] : conditions_)
      if (def == c) return n;
    return std::nullopt;
  }

  friend bool operator==(const Suite& a, const Suite& b) {
    return a.requirements_ == b.requirements_ && a.conditions_ == b.conditions_;
  }

 private:
  std::vector<NamedCondition> conditions_;
  std::vector<Requirement> requirements_;
};

namespace detail {

using ojson = nlohmann::ordered_json;

[[noreturn]] inline void malformed(const std::string& location, const std::string& what) {
  throw LoadError(LoadError::Kind::Malformed, {}, location, location + ": " + what);
}

[[noreturn]] inline void malformed_pattern(const std::string& location, const std::string& what) {
  throw LoadError(LoadError::Kind::MalformedPattern, {}, location, location + ": " + what);
}

// Parses JSON, rejecting duplicate object keys. nlohmann keeps the last
// value silently, which would hide a second definition of a condition.
inline ojson parse_strict_json(std::string_view text) {
  struct Frame {
    std::set<std::string> keys;
    std::string last_key;
  };
  std::vector<Frame> stack;
  auto cb = [&](int, ojson::parse_event_t ev, ojson& parsed) {
    using E = ojson::parse_event_t;
    switch (ev) {
      case E::object_start:
      case E::array_start: stack.emplace_back(); break;
      case E::object_end:
      case E::array_end:
        if (!stack.empty()) stack.pop_back();
        break;
      case E::key: {
        auto key = parsed.get<std::string>();
        Frame& top = stack.back();
        if (!top.keys.insert(key).second) {
          const bool in_conditions = stack.size() == 2 && stack[0].last_key == "conditions";
          if (in_conditions)
            throw LoadError(LoadError::Kind::DuplicateDefinition, key, "conditions." + key,
                            "condition '" + key + "' is defined more than once");
          throw LoadError(LoadError::Kind::Malformed, key, key, "duplicate key '" + key + "'");
        }
        top.last_key = key;
        break;
      }
      default: break;
    }
    return true;
  };
  try {
    return ojson::parse(text.begin(), text.end(), cb);
  } catch (const ojson::parse_error& e) {
    malformed("byte " + std::to_string(e.byte), e.what());
  }
}

inline void only_keys(const ojson& obj, std::initializer_list<std::string_view> allowed, const std::string& where,
                      bool pattern_error) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      if (pattern_error) malformed_pattern(where + "." + key, "unexpected field");
      malformed(where + "." + key, "unexpected field");
    }
  }
}

class SuiteReader {
 public:
  explicit SuiteReader(const ojson& doc) : doc_(doc) {}

  Suite read() {
    if (!doc_.is_object()) malformed("$", "suite must be a JSON object");
    only_keys(doc_, {"conditions", "requirements"}, "$", false);
    read_conditions();
    read_requirements();
    return std::move(suite_);
  }

 private:
  void read_conditions() {
    if (!doc_.contains("conditions")) return;
    const auto& conds = doc_["conditions"];
    if (!conds.is_object()) malformed("conditions", "expected an object");
    for (const auto& [name, text] : conds.items()) {
      const std::string where = "conditions." + name;
      if (!is_atom_name(name)) malformed(where, "condition names must match [a-z_][a-z0-9_]*");
      if (!text.is_string()) malformed(where, "expected condition text");
      try {
        suite_.define_condition(name, parse_condition(text.get<std::string>()));
      } catch (const SyntaxError& e) {
        malformed(where, e.what());
      }
    }
  }

  void read_requirements() {
    if (!doc_.contains("requirements")) return;
    const auto& reqs = doc_["requirements"];
    if (!reqs.is_array()) malformed("requirements", "expected an array");
    for (std::size_t i = 0; i < reqs.size(); ++i) suite_.add_requirement(read_requirement(reqs[i], i));
  }

  Requirement read_requirement(const ojson& j, std::size_t index) {
    const std::string where = "requirements[" + std::to_string(index) + "]";
    if (!j.is_object()) malformed(where, "expected an object");
    only_keys(j, {"name", "pattern", "scope", "meta"}, where, false);
    if (!j.contains("name") || !j["name"].is_string()) malformed(where + ".name", "missing requirement name");
    Requirement req;
    req.name = j["name"].get<std::string>();
    if (!is_requirement_name(req.name)) malformed(where + ".name", "invalid requirement name '" + req.name + "'");
    if (!j.contains("pattern")) malformed_pattern(where + ".pattern", "missing pattern");
    req.pattern = read_pattern(j["pattern"], where + ".pattern");
    if (!j.contains("scope")) malformed_pattern(where + ".scope", "missing scope");
    req.scope = read_scope(j["scope"], where + ".scope");
    if (j.contains("meta")) req.meta = read_meta(j["meta"], where + ".meta");
    return req;
  }

  Condition ref(const ojson& obj, const char* field, const std::string& where) {
    const std::string loc = where + "." + field;
    if (!obj.contains(field)) malformed_pattern(loc, "missing field");
    return resolve(obj[field], loc);
  }

  Condition resolve(const ojson& v, const std::string& loc) {
    if (!v.is_string()) malformed_pattern(loc, "expected a condition name");
    const auto name = v.get<std::string>();
    auto c = suite_.find_condition(name);
    if (!c) throw LoadError(LoadError::Kind::UnknownReference, name, loc, loc + ": unknown condition '" + name + "'");
    return *c;
  }

  std::vector<Condition> chain(const ojson& obj, const std::string& where) {
    const std::string loc = where + ".chain";
    if (!obj.contains("chain") || !obj["chain"].is_array() || obj["chain"].empty())
      malformed_pattern(loc, "chain must be a nonempty array of condition names");
    std::vector<Condition> out;
    for (std::size_t i = 0; i < obj["chain"].size(); ++i)
      out.push_back(resolve(obj["chain"][i], loc + "[" + std::to_string(i) + "]"));
    return out;
  }

  static std::string type_of(const ojson& obj, const std::string& where) {
    if (!obj.is_object()) malformed_pattern(where, "expected an object");
    if (!obj.contains("type") || !obj["type"].is_string()) malformed_pattern(where + ".type", "missing type");
    return obj["type"].get<std::string>();
  }

  Pattern read_pattern(const ojson& j, const std::string& where) {
    const std::string type = type_of(j, where);
    if (type == "absence") {
      only_keys(j, {"type", "p"}, where, true);
      return pattern::Absence{ref(j, "p", where)};
    }
    if (type == "universality") {
      only_keys(j, {"type", "p"}, where, true);
      return pattern::Universality{ref(j, "p", where)};
    }
    if (type == "existence") {
      only_keys(j, {"type", "p"}, where, true);
      return pattern::Existence{ref(j, "p", where)};
    }
    if (type == "bounded_existence") {
      only_keys(j, {"type", "p", "k"}, where, true);
      if (!j.contains("k") || !j["k"].is_number_integer() || j["k"].get<long long>() < 0)
        malformed_pattern(where + ".k", "k must be a non-negative integer");
      return pattern::BoundedExistence{ref(j, "p", where), j["k"].get<std::size_t>()};
    }
    if (type == "precedence") {
      only_keys(j, {"type", "s", "p"}, where, true);
      return pattern::Precedence{ref(j, "s", where), ref(j, "p", where)};
    }
    if (type == "response") {
      only_keys(j, {"type", "p", "s", "strict"}, where, true);
      bool strict = false;
      if (j.contains("strict")) {
        if (!j["strict"].is_boolean()) malformed_pattern(where + ".strict", "strict must be a boolean");
        strict = j["strict"].get<bool>();
      }
      return pattern::Response{ref(j, "p", where), ref(j, "s", where), strict};
    }
    if (type == "response_chain") {
      only_keys(j, {"type", "p", "chain"}, where, true);
      return pattern::ResponseChain{ref(j, "p", where), chain(j, where)};
    }
    if (type == "precedence_chain") {
      only_keys(j, {"type", "chain", "p"}, where, true);
      auto c = chain(j, where);
      return pattern::PrecedenceChain{std::move(c), ref(j, "p", where)};
    }
    malformed_pattern(where + ".type", "unknown pattern type '" + type + "'");
  }

  Scope read_scope(const ojson& j, const std::string& where) {
    const std::string type = type_of(j, where);
    if (type == "globally") {
      only_keys(j, {"type"}, where, true);
      return scope::Globally{};
    }
    if (type == "before") {
      only_keys(j, {"type", "r"}, where, true);
      return scope::Before{ref(j, "r", where)};
    }
    if (type == "after") {
      only_keys(j, {"type", "q"}, where, true);
      return scope::After{ref(j, "q", where)};
    }
    if (type == "between") {
      only_keys(j, {"type", "q", "r"}, where, true);
      return scope::Between{ref(j, "q", where), ref(j, "r", where)};
    }
    if (type == "after_until") {
      only_keys(j, {"type", "q", "r"}, where, true);
      return scope::AfterUntil{ref(j, "q", where), ref(j, "r", where)};
    }
    malformed_pattern(where + ".type", "unknown scope type '" + type + "'");
  }

  static TraceLinks read_meta(const ojson& j, const std::string& where) {
    if (!j.is_object()) malformed(where, "expected an object");
    only_keys(j, {"source_url", "source_quote", "repo_url"}, where, false);
    TraceLinks out;
    auto text = [&](const char* field) -> std::optional<std::string> {
      if (!j.contains(field)) return std::nullopt;
      if (!j[field].is_string()) malformed(where + "." + field, "expected a string");
      return j[field].get<std::string>();
    };
    out.source_url = text("source_url");
    out.source_quote = text("source_quote");
    out.repo_url = text("repo_url");
    if (out.source_quote && out.source_quote->empty()) malformed(where + ".source_quote", "must be nonempty");
    return out;
  }

  const ojson& doc_;
  Suite suite_;
};

}  // namespace detail

/// Parses and validates a suite file. Throws LoadError.
inline Suite load_suite(std::string_view text) {
  const auto doc = detail::parse_strict_json(text);
  return detail::SuiteReader(doc).read();
}

/// Serializes a suite in the loader's format. Every condition a requirement
/// uses must be defined in the suite; throws std::invalid_argument otherwise.
inline std::string save_suite(const Suite& suite) {
  using detail::ojson;
  ojson doc;
  doc["conditions"] = ojson::object();
  for (const auto& [name, c] : suite.conditions()) doc["conditions"][name] = print_condition(c);

  auto name = [&](const Requirement& req, const Condition& c) {
    auto n = suite.name_of(c);
    if (!n) throw std::invalid_argument("requirement " + req.name + " uses a condition the suite does not define");
    return *n;
  };

  doc["requirements"] = ojson::array();
  for (const auto& req : suite.requirements()) {
    ojson r;
    r["name"] = req.name;
    auto names = [&](const std::vector<Condition>& cs) {
      ojson arr = ojson::array();
      for (const auto& c : cs) arr.push_back(name(req, c));
      return arr;
    };
    r["pattern"] = std::visit(
        overloaded{
            [&](const pattern::Absence& a) { return ojson{{"type", "absence"}, {"p", name(req, a.p)}}; },
            [&](const pattern::Universality& a) { return ojson{{"type", "universality"}, {"p", name(req, a.p)}}; },
            [&](const pattern::Existence& a) { return ojson{{"type", "existence"}, {"p", name(req, a.p)}}; },
            [&](const pattern::BoundedExistence& a) {
              return ojson{{"type", "bounded_existence"}, {"p", name(req, a.p)}, {"k", a.k}};
            },
            [&](const pattern::Precedence& a) {
              return ojson{{"type", "precedence"}, {"s", name(req, a.s)}, {"p", name(req, a.p)}};
            },
            [&](const pattern::Response& a) {
              return ojson{{"type", "response"}, {"p", name(req, a.p)}, {"s", name(req, a.s)}, {"strict", a.strict}};
            },
            [&](const pattern::ResponseChain& a) {
              return ojson{{"type", "response_chain"}, {"p", name(req, a.p)}, {"chain", names(a.chain)}};
            },
            [&](const pattern::PrecedenceChain& a) {
              return ojson{{"type", "precedence_chain"}, {"chain", names(a.chain)}, {"p", name(req, a.p)}};
            },
        },
        req.pattern);
    r["scope"] = std::visit(overloaded{
                                [&](const scope::Globally&) { return ojson{{"type", "globally"}}; },
                                [&](const scope::Before& b) { return ojson{{"type", "before"}, {"r", name(req, b.r)}}; },
                                [&](const scope::After& a) { return ojson{{"type", "after"}, {"q", name(req, a.q)}}; },
                                [&](const scope::Between& b) {
                                  return ojson{{"type", "between"}, {"q", name(req, b.q)}, {"r", name(req, b.r)}};
                                },
                                [&](const scope::AfterUntil& b) {
                                  return ojson{{"type", "after_until"}, {"q", name(req, b.q)}, {"r", name(req, b.r)}};
                                },
                            },
                            req.scope);
    if (!req.meta.empty()) {
      ojson m = ojson::object();
      if (req.meta.source_url) m["source_url"] = *req.meta.source_url;
      if (req.meta.source_quote) m["source_quote"] = *req.meta.source_quote;
      if (req.meta.repo_url) m["repo_url"] = *req.meta.repo_url;
      r["meta"] = m;
    }
    doc["requirements"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

/// JSON Lines: one array of atom names per line. A final newline is optional.
inline Trace load_trace(std::string_view text) {
  Trace out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw TraceError(line_no, "malformed JSON");
    }
    if (!j.is_array()) throw TraceError(line_no, "expected an array of atom names");
    State s;
    for (const auto& a : j) {
      if (!a.is_string()) throw TraceError(line_no, "expected an array of atom names");
      const auto name = a.get<std::string>();
      if (!is_atom_name(name)) throw TraceError(line_no, "invalid atom name '" + name + "'");
      s.insert(name);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Inverse of load_trace; atoms sorted per line, every line newline-terminated.
inline std::string write_trace(const Trace& trace) {
  std::string out;
  for (const auto& s : trace) {
    out += '[';
    bool first = true;
    for (const auto& a : s.atoms()) {
      if (!first) out += ',';
      first = false;
      out += '"';
      out += a;
      out += '"';
    }
    out += "]\n";
  }
  return out;
}

}  // namespace reqpat
