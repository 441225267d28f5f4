#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pzeta {

/// A permutation of the points 0..degree-1, stored as its image array.
/// The text interface (cycle notation) is 1-based; everything internal is
/// 0-based. Composition is function composition: (a * b)(x) = a(b(x)).
class Perm {
 public:
  using Point = std::uint16_t;

  /// Validates that `images` is a bijection on 0..images.size()-1.
  explicit Perm(std::vector<Point> images);

  static Perm identity(int degree);

  /// Parses disjoint cycle notation like "(1 2 3)(4 5)" with 1-based points.
  /// An empty string (or "()") is the identity. If degree < 0 it is inferred
  /// as the largest point mentioned (at least 1).
  static Perm from_cycles(const std::string& text, int degree = -1);

  int degree() const { return static_cast<int>(images_.size()); }
  Point apply(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  /// this after rhs: result(x) = this(rhs(x)).
  Perm compose(const Perm& rhs) const;
  Perm inverse() const;

  bool is_identity() const;

  /// Canonical disjoint-cycle form, 1-based, smallest point first per cycle;
  /// "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Perm&) const = default;

 private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// Parses one permutation per line; blank lines and lines starting with '#'
/// are skipped. All permutations are padded to a common degree (given, or
/// inferred as the largest point mentioned; at least 1).
std::vector<Perm> parse_generators(const std::string& text, int degree = -1);

}  // namespace pzeta
