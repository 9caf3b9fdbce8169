#include "placto/rewrite.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace placto {

namespace {

using Cmp = PatternRelation::Cmp;

bool is_variable(char ch) { return ch >= 'a' && ch <= 'z'; }

std::string sorted(std::string s) {
  std::sort(s.begin(), s.end());
  return s;
}

std::string distinct(std::string s) {
  s = sorted(std::move(s));
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool holds(Cmp op, Letter x, Letter y) {
  switch (op) {
    case Cmp::Less: return x < y;
    case Cmp::LessEq: return x <= y;
    case Cmp::Equal: return x == y;
  }
  return false;
}

Word rewrite_window(const Word& w, std::size_t pos, std::size_t len, const std::string& pattern,
                    const std::string& chain_vars, const std::vector<Letter>& values) {
  std::vector<Letter> out(w.begin(), w.end());
  for (std::size_t i = 0; i < len; ++i) {
    out[pos + i] = values[chain_vars.find(pattern[i])];
  }
  return Word(std::move(out), w.alphabet_size());
}

}  // namespace

PatternRelation::PatternRelation(std::string id, std::string left, std::string right,
                                 std::string_view constraints)
    : id_(std::move(id)), left_(std::move(left)), right_(std::move(right)) {
  if (left_.empty() || left_.size() != right_.size()) {
    throw Error("relation " + id_ + ": patterns must be nonempty and of equal length");
  }
  for (char ch : left_ + right_) {
    if (!is_variable(ch)) throw Error("relation " + id_ + ": pattern variables must be lowercase letters");
  }
  if (sorted(left_) != sorted(right_)) {
    throw Error("relation " + id_ + ": left and right patterns must use the same variables");
  }
  std::size_t i = 0;
  while (i < constraints.size()) {
    const char ch = constraints[i];
    if (ch == ' ') {
      ++i;
    } else if (is_variable(ch)) {
      if (chain_vars_.size() != chain_ops_.size()) {
        throw Error("relation " + id_ + ": missing comparison in constraint chain");
      }
      chain_vars_.push_back(ch);
      ++i;
    } else {
      Cmp op;
      if (constraints.substr(i, 2) == "<=") {
        op = Cmp::LessEq;
        i += 2;
      } else if (constraints.substr(i, 3) == "≤") {
        op = Cmp::LessEq;
        i += 3;
      } else if (ch == '<') {
        op = Cmp::Less;
        ++i;
      } else if (ch == '=') {
        op = Cmp::Equal;
        ++i;
      } else {
        throw Error("relation " + id_ + ": bad constraint character '" + std::string(1, ch) + "'");
      }
      if (chain_vars_.size() != chain_ops_.size() + 1) {
        throw Error("relation " + id_ + ": comparison without a left operand");
      }
      chain_ops_.push_back(op);
    }
  }
  if (chain_vars_.empty() || chain_ops_.size() + 1 != chain_vars_.size()) {
    throw Error("relation " + id_ + ": malformed constraint chain");
  }
  if (distinct(chain_vars_) != sorted(chain_vars_) || distinct(chain_vars_) != distinct(left_)) {
    throw Error("relation " + id_ + ": constraint chain must order each pattern variable exactly once");
  }
}

std::string PatternRelation::constraint_text() const {
  std::string out(1, chain_vars_[0]);
  for (std::size_t i = 0; i < chain_ops_.size(); ++i) {
    out += chain_ops_[i] == Cmp::Less ? "<" : chain_ops_[i] == Cmp::LessEq ? "<=" : "=";
    out.push_back(chain_vars_[i + 1]);
  }
  return out;
}

PatternRelation PatternRelation::reversed() const {
  return PatternRelation(id_, right_, left_, constraint_text());
}

std::optional<std::vector<Letter>> PatternRelation::match(const std::string& pattern,
                                                          std::span<const Letter> window) const {
  if (window.size() != pattern.size()) return std::nullopt;
  std::vector<Letter> values(chain_vars_.size(), 0);
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    auto& slot = values[chain_vars_.find(pattern[i])];
    if (slot != 0 && slot != window[i]) return std::nullopt;
    slot = window[i];
  }
  for (std::size_t i = 0; i < chain_ops_.size(); ++i) {
    if (!holds(chain_ops_[i], values[i], values[i + 1])) return std::nullopt;
  }
  return values;
}

RelationSet RelationSet::knuth() {
  return RelationSet("knuth", {
                                  PatternRelation("K.1", "acb", "cab", "a<=b<c"),
                                  PatternRelation("K.2", "bca", "bac", "a<b<=c"),
                              });
}

RelationSet RelationSet::shifted_knuth() {
  return RelationSet("shifted-knuth", {
                                          PatternRelation("SP.1", "abdc", "adbc", "a<=b<=c<d"),
                                          PatternRelation("SP.2", "acdb", "acbd", "a<=b<c<=d"),
                                          PatternRelation("SP.3", "dacb", "adcb", "a<=b<c<d"),
                                          PatternRelation("SP.4", "badc", "bdac", "a<b<=c<d"),
                                          PatternRelation("SP.5", "cbda", "cdba", "a<b<c<=d"),
                                          PatternRelation("SP.6", "dbca", "bdca", "a<b<=c<d"),
                                          PatternRelation("SP.7", "bcda", "bcad", "a<b<=c<=d"),
                                          PatternRelation("SP.8", "cadb", "cdab", "a<=b<c<=d"),
                                      });
}

RelationSet RelationSet::custom(std::vector<PatternRelation> relations, std::string name) {
  return RelationSet(std::move(name), std::move(relations));
}

RelationSet RelationSet::from_json(std::string_view json_text, std::string name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("relation JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error("relation JSON must be a list");
  std::vector<PatternRelation> rels;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    if (!item.is_object() || !item.contains("left") || !item.contains("right") || !item.contains("constraints")) {
      throw Error("relation JSON entries need left, right and constraints");
    }
    auto id = item.value("id", "R." + std::to_string(i + 1));
    rels.emplace_back(id, item["left"].get<std::string>(), item["right"].get<std::string>(),
                      item["constraints"].get<std::string>());
  }
  return RelationSet(std::move(name), std::move(rels));
}

RelationSet RelationSet::by_name(std::string_view name) {
  if (name == "knuth") return knuth();
  if (name == "shifted-knuth") return shifted_knuth();
  if (name == "free") return custom({}, "free");
  if (name.starts_with("custom:")) {
    std::string path(name.substr(7));
    std::ifstream in(path);
    if (!in) throw Error("cannot open relation file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
  }
  throw Error("unknown relation set '" + std::string(name) + "'");
}

const PatternRelation& RelationSet::relation(std::string_view id) const {
  for (const auto& r : relations_) {
    if (r.id() == id) return r;
  }
  throw Error("no relation " + std::string(id) + " in " + name_);
}

bool EquivClass::contains(const Word& w) const {
  return std::binary_search(members.begin(), members.end(), w);
}

std::optional<Word> instantiate(const PatternRelation& rel, const Word& window) {
  auto values = rel.match(rel.left(), window.letters());
  if (!values) return std::nullopt;
  return rewrite_window(window, 0, window.size(), rel.right(), rel.chain_variables(), *values);
}

std::vector<Word> neighbors(const Word& w, const RelationSet& rels) {
  std::vector<Word> out;
  const auto letters = w.letters();
  for (const auto& rel : rels.relations()) {
    const auto len = rel.length();
    if (len > w.size()) continue;
    for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
      const auto window = letters.subspan(pos, len);
      if (auto v = rel.match(rel.left(), window)) {
        out.push_back(rewrite_window(w, pos, len, rel.right(), rel.chain_variables(), *v));
      }
      if (auto v = rel.match(rel.right(), window)) {
        out.push_back(rewrite_window(w, pos, len, rel.left(), rel.chain_variables(), *v));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, w);
  return out;
}

EquivClass equiv_class(const Word& w, const RelationSet& rels) {
  std::unordered_set<Word> seen{w};
  std::queue<Word> frontier;
  frontier.push(w);
  while (!frontier.empty()) {
    auto cur = std::move(frontier.front());
    frontier.pop();
    for (auto& next : neighbors(cur, rels)) {
      if (seen.insert(next).second) frontier.push(std::move(next));
    }
  }
  EquivClass cls{{seen.begin(), seen.end()}};
  std::sort(cls.members.begin(), cls.members.end());
  return cls;
}

bool equivalent(const Word& w1, const Word& w2, const RelationSet& rels) {
  if (w1.alphabet_size() != w2.alphabet_size() || content(w1) != content(w2)) return false;
  if (w1 == w2) return true;
  return equiv_class(w1, rels).contains(w2);
}

std::vector<std::pair<Word, Word>> relation_instances(const PatternRelation& rel, int alphabet_size) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& window : all_words(alphabet_size, static_cast<int>(rel.length()))) {
    if (auto image = instantiate(rel, window)) out.emplace_back(window, std::move(*image));
  }
  return out;
}

bool verify_factorization(int alphabet_size, int degree_bound) {
  const auto knuth = RelationSet::knuth();
  const auto shifted = RelationSet::shifted_knuth();
  for (const auto& rel : shifted.relations()) {
    if (static_cast<int>(rel.length()) > degree_bound) continue;
    for (const auto& [u, v] : relation_instances(rel, alphabet_size)) {
      if (!equivalent(u, v, knuth)) return false;
    }
  }
  return true;
}

const EquivClass& ClassIndex::class_of(const Word& w) {
  if (auto it = index_.find(w); it != index_.end()) return classes_[it->second];
  classes_.push_back(equiv_class(w, rels_));
  const auto id = classes_.size() - 1;
  for (const auto& m : classes_.back().members) index_.emplace(m, id);
  return classes_.back();
}

bool ClassIndex::equivalent(const Word& a, const Word& b) {
  if (a.alphabet_size() != b.alphabet_size() || a.size() != b.size()) return false;
  return &class_of(a) == &class_of(b);
}

}  // namespace placto
