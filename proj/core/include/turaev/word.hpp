#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace turaev {

/// A generator to the power +1 or -1. Generators are indices into the owning
/// presentation's generator list.
struct Letter {
  std::size_t gen = 0;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  auto operator<=>(const Letter&) const = default;
};

/// A word in the free group on indexed generators. Not implicitly reduced:
/// trivial relators such as a a^-1 are meaningful for occurrence counts.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  FreeWord reduced() const;
  bool is_reduced() const;
  FreeWord inverse() const;

  /// Concatenation without reduction.
  FreeWord operator*(const FreeWord& rhs) const;

  /// Occurrences of gen^{+-1}.
  std::size_t count(std::size_t gen) const;
  /// Signed exponent sum of gen.
  long exponent_sum(std::size_t gen) const;

  auto operator<=>(const FreeWord&) const = default;
  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace turaev
