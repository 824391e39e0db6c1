#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>

namespace verlinde {

using Int = std::int64_t;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline std::strong_ordering lex_compare(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

inline std::string vector_str(const IntVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

/// A weight in Dynkin labels, i.e. coordinates in the fundamental-weight
/// basis. Dominant iff all labels are non-negative.
struct Weight {
  IntVector labels;

  Weight() = default;
  explicit Weight(IntVector l) : labels(std::move(l)) {}
  Weight(std::initializer_list<Int> l) : labels(IntVector::Map(l.begin(), static_cast<Eigen::Index>(l.size()))) {}

  int rank() const { return static_cast<int>(labels.size()); }
  bool is_dominant() const { return (labels.array() >= 0).all(); }
  bool is_zero() const { return (labels.array() == 0).all(); }
  std::string str() const { return vector_str(labels); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.labels == b.labels; }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return lex_compare(a.labels, b.labels);
  }
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }
};

/// A coweight in fundamental-coweight coordinates. Kept as a distinct type:
/// mixing weight and coweight coordinates in one expression is a contract
/// violation, and the type tag makes it a compile error.
struct Coweight {
  IntVector coords;

  Coweight() = default;
  explicit Coweight(IntVector c) : coords(std::move(c)) {}
  Coweight(std::initializer_list<Int> l) : coords(IntVector::Map(l.begin(), static_cast<Eigen::Index>(l.size()))) {}

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const { return (coords.array() == 0).all(); }
  std::string str() const { return vector_str(coords); }

  friend bool operator==(const Coweight& a, const Coweight& b) { return a.coords == b.coords; }
  friend std::strong_ordering operator<=>(const Coweight& a, const Coweight& b) {
    return lex_compare(a.coords, b.coords);
  }
  friend std::ostream& operator<<(std::ostream& os, const Coweight& c) { return os << c.str(); }
};

} // namespace verlinde
