#pragma once

#include <functional>
#include <optional>
#include <string>

#include "reqpat/suite.hpp"

namespace reqpat {

/// `name: phrase`, the paraphrase of one requirement.
struct PicnicLine {
  std::string name;
  std::string phrase;

  std::string str() const { return name + ": " + phrase; }
  friend bool operator==(const PicnicLine&, const PicnicLine&) = default;
};

/// Display name of a condition, if it has one.
using NameLookup = std::function<std::optional<std::string>(const Condition&)>;

inline NameLookup names_from(const Suite& suite) {
  return [&suite](const Condition& c) { return suite.name_of(c); };
}

/// Canonical paraphrase: pattern phrase, then scope phrase. Throws
/// MissingDisplayName when a referenced condition has no name.
inline PicnicLine render_requirement(const Requirement& req, const NameLookup& names) {
  auto nm = [&](const Condition& c) {
    auto n = names(c);
    if (!n) throw MissingDisplayName(req.name);
    return *n;
  };
  auto list = [&](const std::vector<Condition>& cs) {
    std::string out;
    for (std::size_t i = 0; i < cs.size(); ++i) out += (i ? ", " : "") + nm(cs[i]);
    return out;
  };

  std::string phrase = std::visit(
      overloaded{
          [&](const pattern::Absence& a) { return "it is never the case that " + nm(a.p) + " holds"; },
          [&](const pattern::Universality& a) { return "it is always the case that " + nm(a.p) + " holds"; },
          [&](const pattern::Existence& a) { return nm(a.p) + " eventually holds"; },
          [&](const pattern::BoundedExistence& a) {
            return nm(a.p) + " holds in at most " + std::to_string(a.k) + " episodes";
          },
          [&](const pattern::Precedence& a) { return nm(a.s) + " precedes " + nm(a.p); },
          [&](const pattern::Response& a) {
            return nm(a.s) + " responds to " + nm(a.p) + (a.strict ? " strictly" : "");
          },
          [&](const pattern::ResponseChain& a) { return list(a.chain) + " respond in order to " + nm(a.p); },
          [&](const pattern::PrecedenceChain& a) { return list(a.chain) + " precede in order " + nm(a.p); },
      },
      req.pattern);

  phrase += ' ';
  phrase += std::visit(overloaded{
                           [&](const scope::Globally&) -> std::string { return "globally"; },
                           [&](const scope::Before& b) { return "before " + nm(b.r); },
                           [&](const scope::After& a) { return "after " + nm(a.q); },
                           [&](const scope::Between& b) { return "between " + nm(b.q) + " and " + nm(b.r); },
                           [&](const scope::AfterUntil& b) { return "after " + nm(b.q) + " until " + nm(b.r); },
                       },
                       req.scope);
  return {req.name, std::move(phrase)};
}

/// One picnic line per requirement in suite order; a requirement with a
/// source quote is followed by an indented line holding the quote so the
/// two renderings can be compared.
inline std::string render_suite_report(const Suite& suite) {
  std::string out;
  const auto names = names_from(suite);
  for (const auto& req : suite.requirements()) {
    out += render_requirement(req, names).str() + "\n";
    if (req.meta.source_quote) out += "  source: \"" + *req.meta.source_quote + "\"\n";
  }
  return out;
}

namespace detail {

inline std::string table_cell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

inline std::string link_cell(const std::optional<std::string>& url, const std::string& label) {
  if (!url) return "—";
  return "[" + table_cell(label) + "](" + *url + ")";
}

}  // namespace detail

/// Markdown table: Name | Paraphrase | Source | Repo. Missing links are
/// rendered as an em dash.
inline std::string traceability_report(const Suite& suite) {
  std::string out = "| Name | Paraphrase | Source | Repo |\n|---|---|---|---|\n";
  const auto names = names_from(suite);
  for (const auto& req : suite.requirements()) {
    const auto line = render_requirement(req, names);
    const std::string source_label = req.meta.source_quote ? "\"" + *req.meta.source_quote + "\"" : "source";
    out += "| " + detail::table_cell(req.name) + " | " + detail::table_cell(line.phrase) + " | " +
           detail::link_cell(req.meta.source_url, source_label) + " | " + detail::link_cell(req.meta.repo_url, "repo") +
           " |\n";
  }
  return out;
}

}  // namespace reqpat
