#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reqpat {

/// True iff `name` matches `[a-z_][a-z0-9_]*`.
inline bool is_atom_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto lower = [](char c) { return (c >= 'a' && c <= 'z') || c == '_'; };
  if (!lower(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return lower(c) || (c >= '0' && c <= '9'); });
}

/// The set of atoms true at one instant. Absent atoms are false.
class State {
 public:
  State() = default;

  State(std::initializer_list<std::string_view> atoms) {
    for (auto a : atoms) insert(a);
  }

  template <typename Range>
  static State of(const Range& atoms) {
    State s;
    for (const auto& a : atoms) s.insert(a);
    return s;
  }

  /// Throws std::invalid_argument for a name violating the atom rule.
  void insert(std::string_view atom) {
    if (!is_atom_name(atom))
      throw std::invalid_argument("invalid atom name '" + std::string(atom) + "'");
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
    if (it == atoms_.end() || *it != atom) atoms_.emplace(it, atom);
  }

  bool contains(std::string_view atom) const noexcept {
    return std::binary_search(atoms_.begin(), atoms_.end(), atom);
  }

  /// Sorted, duplicate-free.
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_.empty(); }

  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<std::string> atoms_;
};

using Trace = std::vector<State>;

/// Half-open index range [begin, end) over a trace.
struct Segment {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

}  // namespace reqpat
