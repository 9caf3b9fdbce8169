#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "placto/word.hpp"

namespace placto {

/// Weakly decreasing positive parts. The empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  /// "2,1"; "" or "0" give the empty partition.
  static Partition parse(std::string_view text);

  [[nodiscard]] std::span<const int> parts() const { return parts_; }
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int size() const;
  [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
  [[nodiscard]] bool is_strict() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Strictly decreasing positive parts.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  static StrictPartition parse(std::string_view text);

  [[nodiscard]] std::span<const int> parts() const { return partition_.parts(); }
  [[nodiscard]] int length() const { return partition_.length(); }
  [[nodiscard]] int size() const { return partition_.size(); }
  [[nodiscard]] int operator[](std::size_t i) const { return partition_[i]; }
  [[nodiscard]] const Partition& partition() const { return partition_; }
  [[nodiscard]] std::string str() const { return partition_.str(); }

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  Partition partition_;
};

/// All partitions of m, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int m);
/// All strict partitions of m, in decreasing lexicographic order.
std::vector<StrictPartition> strict_partitions_of(int m);

/// Left-justified semistandard Young tableau; rows listed top to bottom.
struct Tableau {
  std::vector<std::vector<Letter>> rows;

  [[nodiscard]] Partition shape() const;
  [[nodiscard]] bool is_semistandard() const;
  [[nodiscard]] int size() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

/// Letter of the doubled alphabet, ordered 1' < 1 < 2' < 2 < ...
struct PrimedLetter {
  Letter base = 1;
  bool primed = false;

  [[nodiscard]] int key() const { return 2 * base - (primed ? 1 : 0); }
  /// "4" or "4'".
  [[nodiscard]] std::string str() const;
  static PrimedLetter parse(std::string_view text);

  friend bool operator==(const PrimedLetter& a, const PrimedLetter& b) { return a.key() == b.key(); }
  friend auto operator<=>(const PrimedLetter& a, const PrimedLetter& b) { return a.key() <=> b.key(); }
};

/// Shifted tableau: row i (0-based) begins on the main diagonal, column i.
struct ShiftedTableau {
  std::vector<std::vector<PrimedLetter>> rows;

  [[nodiscard]] Partition shape() const;
  /// All four shifted semistandard conditions plus a strict shape.
  [[nodiscard]] bool is_valid() const;
  [[nodiscard]] int size() const;
  /// Row-major cell access by absolute column.
  [[nodiscard]] const PrimedLetter& at(std::size_t row, std::size_t col) const { return rows[row][col - row]; }
  friend bool operator==(const ShiftedTableau&, const ShiftedTableau&) = default;
  friend auto operator<=>(const ShiftedTableau& a, const ShiftedTableau& b) {
    return a.rows <=> b.rows;
  }
};

/// Row insertion: z replaces the leftmost entry strictly greater than z,
/// which is inserted into the next row.
Tableau schensted_insert(Tableau t, Letter z);
Tableau p_tableau(const Word& w);
/// Rows read left to right, bottom row first.
Word reading_word(const Tableau& t, int alphabet_size);

/// One step of mixed insertion of an unprimed letter.
ShiftedTableau mixed_insert(ShiftedTableau t, PrimedLetter z);
ShiftedTableau mixed_insert_word(const Word& w);

/// Strictly decreasing prefix followed by a weakly increasing suffix.
bool is_hook_word(std::span<const Letter> w);
int longest_hook_subword(std::span<const Letter> w);
/// Length of a longest weakly increasing subsequence.
int longest_weakly_increasing(std::span<const Letter> w);

/// Segments of lengths nu_l, ..., nu_1 are hook words, and each segment
/// after the first is a longest hook subword of itself joined with its
/// predecessor.
bool hook_factorization_check(const Word& w, const StrictPartition& nu);

/// hook(nu) over {1..n}, built segment by segment. Sorted.
std::vector<Word> enumerate_hook(const StrictPartition& nu, int alphabet_size);
/// hook(nu) over {1..n} by filtering all n^|nu| words. Sorted.
std::vector<Word> enumerate_hook_by_filter(const StrictPartition& nu, int alphabet_size);

/// The same factorization test with weakly increasing segments, used by
/// free Schur functions.
bool increasing_factorization_check(const Word& w, const Partition& nu);

std::vector<Tableau> enumerate_ssyt(const Partition& nu, int alphabet_size);
std::vector<ShiftedTableau> enumerate_shssyt(const StrictPartition& nu, int alphabet_size);

}  // namespace placto
