#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace commprob {

/// Cycle type: parts in descending order, fixed points included as 1s.
using CycleType = std::vector<unsigned>;

/// Bijection on {0, ..., degree-1}. Cycle notation is 1-based.
///
/// Products compose right to left like functions: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  using Point = std::uint32_t;

  explicit Permutation(std::size_t degree = 0);
  /// Throws InvalidParameter unless `images` is a bijection.
  static Permutation from_images(std::vector<Point> images);
  /// `cycles` holds 1-based points; cycles are composed right to left.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// +1 for even permutations, -1 for odd.
  int sign() const;
  CycleType cycle_type() const;
  /// Disjoint-cycle notation, e.g. "(1 2 3)(4 5)"; the identity prints as "()".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

bool is_odc(const CycleType& t);
/// Sign of any permutation with cycle type `t`.
int cycle_type_sign(const CycleType& t);

}  // namespace commprob
