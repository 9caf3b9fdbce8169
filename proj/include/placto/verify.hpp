#pragma once

#include <optional>
#include <string>
#include <vector>

#include "placto/algebra.hpp"
#include "placto/rewrite.hpp"
#include "placto/word.hpp"

namespace placto::verify {

// ------------------------------------------------------------------ tables

/// Products whose monomials are tabulated by content pattern.
enum class TableFamily {
  Unshifted1,    ///< S(1,1)·S(1)
  Unshifted2x1,  ///< S(2)·S(1)
  Shifted2,      ///< P(2,1)·P(1)
  Unshifted3x1,  ///< P(3)·P(1), plus P(1)·P(3) for distinct letters
  Bcc,           ///< P(3)·P(1) with the largest letter repeated
};

TableFamily parse_family(std::string_view name);
std::string family_name(TableFamily family);

struct TableCase {
  std::string family;
  std::string product;  ///< e.g. "P(2,1)*P(1)"
  std::string pattern;  ///< sorted variable multiset, e.g. "aacd"
  std::vector<std::string> expected;
  std::vector<std::string> actual;
  std::vector<std::string> missing;
  std::vector<std::string> extra;
  [[nodiscard]] bool passed() const { return missing.empty() && extra.empty(); }
};

/// Monomials of the product `left`·`right` whose content matches `pattern`
/// when the pattern's distinct variables are sent, in order, to `letters`
/// (strictly increasing, over {1..alphabet_size}). Returned in variable
/// letters, sorted.
std::vector<std::string> pattern_monomials(const NcPoly& left, const NcPoly& right, std::string_view pattern,
                                           std::span<const Letter> letters);

/// Compares computed monomials against the tabulated reading words.
/// An empty pattern runs every tabulated pattern of the family.
std::vector<TableCase> verify_tables(TableFamily family, std::string_view pattern = {});

// ------------------------------------------------------------------ matching

/// Words of one content class left uncancelled in A·B − B·A, with the
/// restriction-compatibility relation between them.
struct ContentMatching {
  ContentVector content;
  std::vector<Word> left;   ///< from A·B
  std::vector<Word> right;  ///< from B·A
  std::vector<std::vector<bool>> compatible;
  int matchings = 0;            ///< perfect matchings found, capped at 2
  std::vector<int> partner;     ///< left index -> right index, when matchings == 1
  [[nodiscard]] bool unique() const { return matchings == 1; }
};

/// Intervals I (inside the letters used) on which the restrictions of u and
/// v are not Knuth-equivalent. Empty means compatible.
std::vector<Interval> separating_intervals(const Word& u, const Word& v, ClassIndex& knuth);

/// Splits A·B − B·A by content and finds the perfect matchings between
/// uncancelled monomials under restriction compatibility.
std::vector<ContentMatching> forced_matchings(const NcPoly& a, const NcPoly& b, ClassIndex& knuth);

// ------------------------------------------------------------------ cases

struct Elimination {
  Word word;
  std::string symbolic;
  std::vector<std::string> reasons;
};

struct CaseReport {
  std::string relation_id;                  ///< first relation realized by (left, survivor)
  std::vector<std::string> relation_ids;    ///< every relation realized by the pair
  std::string letter_pattern;               ///< e.g. "a=b<c<d"
  Word left;
  std::string left_symbolic;
  std::vector<Word> candidates;
  std::vector<std::string> candidates_symbolic;
  std::vector<Elimination> eliminated;
  std::optional<Word> survivor;
  std::string survivor_symbolic;
  std::string failure;  ///< empty on pass
  [[nodiscard]] bool passed() const { return failure.empty(); }
};

/// Rebuilds the case analysis deriving the Knuth or shifted Knuth
/// presentation from commutation, restriction and matching alone. Reports
/// are sorted by (relation_id, letter_pattern).
std::vector<CaseReport> verify_case_analysis(const RelationSet& rels);

/// True when the (left, survivor) pairs of `reports` are exactly the
/// nontrivial instances of `rels` over the content patterns examined.
bool regenerates_presentation(const std::vector<CaseReport>& reports, const RelationSet& rels);

// ------------------------------------------------------------------ axioms

enum class AxiomSystem { Plactic, ShiftedPlactic };

struct AxiomReport {
  std::string axiom_id;
  std::string relation_set;
  int alphabet_size = 0;
  int max_degree = 0;
  long long instances_checked = 0;
  std::vector<std::string> violations;  ///< capped at a few witnesses
  long long violation_count = 0;
  bool informational = false;  ///< reported but never fails the run
  std::string note;
  [[nodiscard]] bool passed() const { return violation_count == 0; }
};

/// Exhaustive check of the four axioms over {1..n}, degrees 1..D, for the
/// congruence generated by `rels`.
std::vector<AxiomReport> verify_axioms(AxiomSystem system, const RelationSet& rels, int alphabet_size,
                                       int max_degree);

// ------------------------------------------------------------------ replacements

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

/// Partition of the words of `degree` over {1..n} generated by the pairs
/// that commuting `a` with `b` forces. Empty when some content class has no
/// unique matching; `witness` then names it.
std::optional<std::vector<std::vector<Word>>> forced_partition(const NcPoly& a, const NcPoly& b, int degree,
                                                               std::string* witness = nullptr);

/// Partition of the words of `degree` over {1..n} into classes of `rels`.
std::vector<std::vector<Word>> class_partition(const RelationSet& rels, int alphabet_size, int degree);

/// (a) P(1)·P(2) = P(2)·P(1) exactly in the free algebra over {1..n}.
CheckResult replacement_free_identity(int alphabet_size, int max_degree);
/// (b) Commuting S(1) with S(2) forces the same degree-3 classes as S(1)
/// with S(1,1), and these are the Knuth classes.
CheckResult replacement_unshifted(int alphabet_size);
/// (c) Commuting P(1) with P(3) forces the same degree-4 classes as P(1)
/// with P(2,1), and these are the shifted Knuth classes.
CheckResult replacement_shifted(int alphabet_size);

/// All three checks over {1..n} with degree bound D (n >= 4, D >= 4).
std::vector<CheckResult> verify_replacements(int alphabet_size, int max_degree);

}  // namespace placto::verify
