#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hodgeheat {

/// An abstract simplex: a strictly increasing list of nonnegative vertex ids.
/// The empty list is the (-1)-dimensional empty simplex used in augmented mode.
struct Simplex {
  std::vector<int> verts;

  Simplex() = default;
  explicit Simplex(std::vector<int> v) : verts(std::move(v)) {}

  /// Sorts and validates; throws std::invalid_argument on duplicates or
  /// negative ids.
  static Simplex of(std::vector<int> v);

  int dim() const { return static_cast<int>(verts.size()) - 1; }
  int nverts() const { return static_cast<int>(verts.size()); }
  bool empty() const { return verts.empty(); }

  /// Canonical key: comma-joined sorted vertex ids, "" for the empty simplex.
  std::string key() const;
  static Simplex parse_key(const std::string& key);

  /// Face with the vertex at `pos` removed.
  Simplex face_dropping(int pos) const;
  bool contains_vertex(int v) const;

  auto operator<=>(const Simplex&) const = default;
};

}  // namespace hodgeheat
