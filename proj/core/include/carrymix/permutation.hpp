#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carrymix {

/// Bijection of {1..n} in one-line notation: images()[i-1] is sigma(i).
///
/// Composition follows the usual convention (sigma * tau)(i) = sigma(tau(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws ValidationError unless images is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  static Permutation reversal(std::size_t n);
  /// Parses whitespace- or comma-separated one-line notation, e.g. "4 5 3 2 1 6".
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return images_.size(); }
  /// sigma(i) for 1-based i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Space-separated one-line notation.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Positions i (1-based) with sigma(i+1) < sigma(i).
std::vector<int> descent_set(const Permutation& p);
/// Number of descents, in [0, n-1].
int descents(const Permutation& p);

/// All n! permutations of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace carrymix
