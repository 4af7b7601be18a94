#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace finglobal {

/// A bijection of {1, ..., degree}, stored 0-based.
///
/// Products compose right to left: (p * q)(i) = p(q(i)). Comparison is
/// lexicographic on the image sequence (degree first), which is the element
/// order every "least representative" in the library refers to.
class Perm {
 public:
  static constexpr int kMaxDegree = 16;

  Perm() : Perm(1) {}
  explicit Perm(int degree);

  /// Images of 1..n, 1-based. Throws InvalidInput unless a permutation.
  static Perm from_images(std::span<const int> images);
  /// Cycle notation such as "(1 2)(3 4)"; "()" is the identity.
  static Perm from_cycles(std::string_view text, int degree);

  int degree() const { return degree_; }
  /// 0-based image of a 0-based point.
  int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }
  std::vector<int> images() const;

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  /// this * x * this^-1
  Perm conjugate(const Perm& x) const;

  bool is_identity() const;
  int order() const;
  /// Cycle lengths in weakly decreasing order, fixed points included.
  std::vector<int> cycle_type() const;
  /// Cycle type of the restriction to the invariant set [first, first + count).
  std::vector<int> cycle_type_on(int first, int count) const;
  int sign() const;

  /// Same permutation, acting trivially on the new points up to `degree`.
  Perm extended(int degree) const;
  /// Moves the action to points [offset, offset + this->degree()) of `degree`.
  Perm shifted(int offset, int degree) const;
  /// Restriction to the invariant block [first, first + count), relabeled.
  Perm restricted(int first, int count) const;

  /// Injective 64-bit key among permutations of equal degree.
  std::uint64_t key() const;
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::uint8_t degree_ = 1;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

}  // namespace finglobal
