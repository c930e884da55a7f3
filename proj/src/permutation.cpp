#include "commprob/permutation.hpp"

#include "commprob/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace commprob {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) throw InvalidParameter("permutation images are not a bijection");
    seen[p] = true;
  }
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation out(degree);
  // Rightmost cycle acts first.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cycle = *it;
    std::vector<bool> used(degree, false);
    for (Point p : cycle) {
      if (p < 1 || p > degree) {
        throw InvalidParameter("cycle point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
      }
      if (used[p - 1]) throw InvalidParameter("cycle repeats point " + std::to_string(p));
      used[p - 1] = true;
    }
    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      c.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
    out = c * out;
  }
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

CycleType Permutation::cycle_type() const {
  CycleType parts;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

int Permutation::sign() const { return cycle_type_sign(cycle_type()); }

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch("cannot compose permutations of different degree");
  Permutation out(p.degree());
  for (std::size_t i = 0; i < q.degree(); ++i) out.images_[i] = p.images_[q.images_[i]];
  return out;
}

bool is_odc(const CycleType& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] % 2 == 0) return false;
    if (i > 0 && t[i] == t[i - 1]) return false;
  }
  return true;
}

int cycle_type_sign(const CycleType& t) {
  // A k-cycle is a product of k-1 transpositions.
  unsigned transpositions = 0;
  for (unsigned part : t) transpositions += part - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

}  // namespace commprob
