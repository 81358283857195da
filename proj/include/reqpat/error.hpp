#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reqpat {

/// Malformed formula or condition text. `position` is a 0-based byte offset.
class SyntaxError : public std::runtime_error {
 public:
  enum class Kind { Lexical, Syntax };

  SyntaxError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Suite file rejected by the loader.
class LoadError : public std::runtime_error {
 public:
  enum class Kind { DuplicateDefinition, UnknownReference, MalformedPattern, Malformed };

  LoadError(Kind kind, std::string subject, std::string location, const std::string& what)
      : std::runtime_error(what),
        kind_(kind),
        subject_(std::move(subject)),
        location_(std::move(location)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }
  const std::string& location() const noexcept { return location_; }

 private:
  Kind kind_;
  std::string subject_;
  std::string location_;
};

/// Trace file rejected by the loader. `line` is 1-based.
class TraceError : public std::runtime_error {
 public:
  TraceError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Requested LTL emission has no catalog formula in this library.
class UnsupportedPattern : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requirement references a condition the paraphraser cannot name.
class MissingDisplayName : public std::runtime_error {
 public:
  explicit MissingDisplayName(std::string requirement)
      : std::runtime_error("requirement " + requirement + " references an unnamed condition"),
        requirement_(std::move(requirement)) {}

  const std::string& requirement() const noexcept { return requirement_; }

 private:
  std::string requirement_;
};

}  // namespace reqpat
