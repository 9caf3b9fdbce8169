#pragma once

#include <optional>
#include <span>
#include <string>
#include <deque>
#include <unordered_map>
#include <vector>

#include "placto/word.hpp"

namespace placto {

/// Homogeneous pattern rule such as `acb ~ cab for a <= b < c`.
///
/// Variables are single lowercase characters. The constraint chain lists
/// every variable once, in increasing order, with a comparison between each
/// consecutive pair. A window matches when the letters it assigns to the
/// variables are consistent and satisfy the whole chain.
class PatternRelation {
 public:
  enum class Cmp { Less, LessEq, Equal };

  /// `constraints` is written like "a<=b<c" ("≤" is accepted for "<=").
  PatternRelation(std::string id, std::string left, std::string right, std::string_view constraints);

  [[nodiscard]] const std::string& id() const { return id_; }
  [[nodiscard]] const std::string& left() const { return left_; }
  [[nodiscard]] const std::string& right() const { return right_; }
  [[nodiscard]] const std::string& chain_variables() const { return chain_vars_; }
  [[nodiscard]] std::span<const Cmp> chain_ops() const { return chain_ops_; }
  [[nodiscard]] std::size_t length() const { return left_.size(); }
  /// Chain text, e.g. "a<=b<c".
  [[nodiscard]] std::string constraint_text() const;
  /// The same rule read right-to-left.
  [[nodiscard]] PatternRelation reversed() const;

  /// Letters assigned to the chain variables when `pattern` matches `window`.
  [[nodiscard]] std::optional<std::vector<Letter>> match(const std::string& pattern,
                                                         std::span<const Letter> window) const;

 private:
  std::string id_;
  std::string left_;
  std::string right_;
  std::string chain_vars_;
  std::vector<Cmp> chain_ops_;
};

class RelationSet {
 public:
  /// K.1 and K.2.
  static RelationSet knuth();
  /// SP.1 through SP.8.
  static RelationSet shifted_knuth();
  static RelationSet custom(std::vector<PatternRelation> relations, std::string name = "custom");
  /// Parses a JSON list of {"left", "right", "constraints"} objects (optional "id").
  static RelationSet from_json(std::string_view json_text, std::string name = "custom");
  /// "knuth", "shifted-knuth", "free" (no relations) or "custom:<path>".
  static RelationSet by_name(std::string_view name);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::span<const PatternRelation> relations() const { return relations_; }
  [[nodiscard]] const PatternRelation& relation(std::string_view id) const;

 private:
  RelationSet(std::string name, std::vector<PatternRelation> relations)
      : name_(std::move(name)), relations_(std::move(relations)) {}

  std::string name_;
  std::vector<PatternRelation> relations_;
};

/// Members of one congruence class, sorted ascending; front() is canonical.
struct EquivClass {
  std::vector<Word> members;
  [[nodiscard]] const Word& representative() const { return members.front(); }
  [[nodiscard]] bool contains(const Word& w) const;
  [[nodiscard]] std::size_t size() const { return members.size(); }
};

/// Rewrites `window` by the relation's right pattern if it matches the left.
std::optional<Word> instantiate(const PatternRelation& rel, const Word& window);

/// Words reachable by one relation application, in either direction.
std::vector<Word> neighbors(const Word& w, const RelationSet& rels);

EquivClass equiv_class(const Word& w, const RelationSet& rels);
bool equivalent(const Word& w1, const Word& w2, const RelationSet& rels);

/// All (left, right) instances of `rel` over {1..n}.
std::vector<std::pair<Word, Word>> relation_instances(const PatternRelation& rel, int alphabet_size);

/// Every shifted Knuth instance over {1..n} of degree <= degree_bound is
/// Knuth-equivalent.
bool verify_factorization(int alphabet_size, int degree_bound);

/// Memoized class lookup for one relation set.
class ClassIndex {
 public:
  explicit ClassIndex(RelationSet rels) : rels_(std::move(rels)) {}

  [[nodiscard]] const RelationSet& relations() const { return rels_; }
  const EquivClass& class_of(const Word& w);
  const Word& canonical(const Word& w) { return class_of(w).representative(); }
  bool equivalent(const Word& a, const Word& b);

 private:
  RelationSet rels_;
  std::deque<EquivClass> classes_;
  std::unordered_map<Word, std::size_t> index_;
};

}  // namespace placto
