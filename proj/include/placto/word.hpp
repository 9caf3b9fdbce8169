#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace placto {

/// Raised on malformed input: bad word text, letters outside the alphabet,
/// mismatched contexts, invalid partitions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter of the truncated alphabet {1..n}.
using Letter = std::uint8_t;

inline constexpr int kMaxAlphabet = 255;

/// Element of the free monoid over {1..n}. Immutable value; ordered by
/// degree first, then lexicographically, so that the least element of a
/// homogeneous set is its lexicographic minimum.
class Word {
 public:
  Word() = default;
  explicit Word(int alphabet_size);
  Word(std::vector<Letter> letters, int alphabet_size);
  Word(std::initializer_list<int> letters, int alphabet_size);

  /// Digits when n <= 9, comma-separated integers otherwise. "" is the unit.
  static Word parse(std::string_view text, int alphabet_size);
  /// Parses with the alphabet taken from the largest letter (at least 1).
  static Word parse(std::string_view text);

  [[nodiscard]] int alphabet_size() const { return alphabet_size_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] std::span<const Letter> letters() const { return letters_; }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] auto begin() const { return letters_.begin(); }
  [[nodiscard]] auto end() const { return letters_.end(); }

  [[nodiscard]] std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 1;
};

/// Multiplicities of each letter; index 0 holds letter 1.
class ContentVector {
 public:
  ContentVector() = default;
  explicit ContentVector(int alphabet_size) : counts_(static_cast<std::size_t>(alphabet_size), 0) {}
  explicit ContentVector(std::vector<int> counts) : counts_(std::move(counts)) {}

  [[nodiscard]] int alphabet_size() const { return static_cast<int>(counts_.size()); }
  [[nodiscard]] int operator[](Letter a) const { return counts_.at(a - 1u); }
  void add(Letter a, int k = 1) { counts_.at(a - 1u) += k; }
  [[nodiscard]] int degree() const;
  [[nodiscard]] std::span<const int> counts() const { return counts_; }
  /// Monomial text such as "x1^2*x3"; "1" for the empty content.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const ContentVector&, const ContentVector&) = default;
  friend auto operator<=>(const ContentVector&, const ContentVector&) = default;

 private:
  std::vector<int> counts_;
};

/// The interval {lo, lo+1, ..., hi} of the alphabet.
class Interval {
 public:
  Interval(Letter lo, Letter hi);
  [[nodiscard]] Letter lo() const { return lo_; }
  [[nodiscard]] Letter hi() const { return hi_; }
  [[nodiscard]] bool contains(Letter a) const { return lo_ <= a && a <= hi_; }
  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Letter lo_;
  Letter hi_;
};

/// Strictly increasing map from a source subalphabet into {1..target_size}.
class OrderedMorphism {
 public:
  OrderedMorphism(std::vector<std::pair<Letter, Letter>> mapping, int target_size);
  static OrderedMorphism identity(int alphabet_size);

  [[nodiscard]] bool in_source(Letter a) const;
  [[nodiscard]] Letter operator()(Letter a) const;
  [[nodiscard]] int target_size() const { return target_size_; }
  [[nodiscard]] std::span<const std::pair<Letter, Letter>> mapping() const { return mapping_; }

 private:
  std::vector<std::pair<Letter, Letter>> mapping_;  // sorted by source
  int target_size_;
};

Word concat(const Word& w1, const Word& w2);
ContentVector content(const Word& w);
Word restrict(const Word& w, const Interval& interval);
Word apply_morphism(const Word& w, const OrderedMorphism& omega);

/// All words of length `degree` over {1..n}, in lexicographic order.
std::vector<Word> all_words(int alphabet_size, int degree);

/// All ordered morphisms whose source is exactly `source` (sorted letters)
/// and whose target is {1..target_size}.
std::vector<OrderedMorphism> ordered_morphisms(std::span<const Letter> source, int target_size);

}  // namespace placto

template <>
struct std::hash<placto::Word> {
  std::size_t operator()(const placto::Word& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.alphabet_size());
    for (auto a : w) h = h * 1099511628211ull ^ a;
    return h;
  }
};
