#include "placto/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace placto::verify {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

std::string distinct_variables(std::string_view pattern) {
  std::string vars(pattern);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::string render(const Word& w, const std::map<Letter, char>& symbols) {
  std::string out;
  for (auto a : w) {
    auto it = symbols.find(a);
    out.push_back(it == symbols.end() ? '?' : it->second);
  }
  return out;
}

// Compositions of `total`, each a content pattern on letters 1..k.
std::vector<std::vector<int>> compositions(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      cur.push_back(p);
      rec(remaining - p);
      cur.pop_back();
    }
  };
  rec(total);
  return out;
}

std::string pattern_of(const std::vector<int>& composition) {
  std::string out;
  for (std::size_t i = 0; i < composition.size(); ++i) out.append(static_cast<std::size_t>(composition[i]), static_cast<char>('a' + i));
  return out;
}

struct TableRow {
  TableFamily family;
  std::string product;
  std::string pattern;
  std::vector<std::string> words;
};

// Reading-word columns of the tabulated products, in variable letters.
const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {TableFamily::Unshifted1, "S(1,1)*S(1)", "abc", {"cba", "cab", "bac"}},
      {TableFamily::Unshifted1, "S(1,1)*S(1)", "aac", {"caa"}},
      {TableFamily::Unshifted1, "S(1,1)*S(1)", "abb", {"bab"}},
      {TableFamily::Unshifted2x1, "S(2)*S(1)", "abc", {"bca", "acb", "abc"}},
      {TableFamily::Unshifted2x1, "S(2)*S(1)", "aab", {"aba", "aab"}},
      {TableFamily::Unshifted2x1, "S(2)*S(1)", "abb", {"abb", "bba"}},
      {TableFamily::Shifted2, "P(2,1)*P(1)", "abcd", {"bdca", "cdba", "adcb", "cdab", "adbc", "bdac", "acbd", "bcad"}},
      {TableFamily::Shifted2, "P(2,1)*P(1)", "abbd", {"bdba", "adbb", "bdab", "bbad"}},
      {TableFamily::Shifted2, "P(2,1)*P(1)", "abcc", {"ccba", "ccab", "acbc", "bcac"}},
      {TableFamily::Shifted2, "P(2,1)*P(1)", "aacd", {"adca", "cdaa", "adac", "acad"}},
      {TableFamily::Unshifted3x1, "P(1)*P(3)", "abcd",
       {"abcd", "acbd", "adbc", "adcb", "bacd", "bcad", "bdac", "bdca", "cabd", "cbad", "cdab", "cdba", "dabc",
        "dbac", "dcab", "dcba"}},
      {TableFamily::Unshifted3x1, "P(3)*P(1)", "abcd",
       {"bcda", "cbda", "dbca", "dcba", "acdb", "cadb", "dacb", "dcab", "abdc", "badc", "dabc", "dbac", "abcd",
        "bacd", "cabd", "cbad"}},
      {TableFamily::Unshifted3x1, "P(3)*P(1)", "aabc", {"cbaa", "baca", "caba", "abca", "aacb", "caab", "aabc", "baac"}},
      {TableFamily::Unshifted3x1, "P(3)*P(1)", "abbc", {"bbca", "cbba", "abcb", "bacb", "cabb", "cbab", "abbc", "babc"}},
      // First row: the tableau (b c c)·a, whose reading word is bcca.
      {TableFamily::Bcc, "P(3)*P(1)", "abcc", {"bcca", "cbca", "accb", "cacb", "abcc", "bacc", "cabc", "cbac"}},
  };
  return rows;
}

// Parses "P(2,1)*P(1)" or "S(1,1)*S(1)" into the two factors at (n, D).
std::pair<NcPoly, NcPoly> product_factors(const std::string& product, int n, int degree) {
  auto factor = [&](std::string_view text) {
    const bool shifted = text.front() == 'P';
    const auto inner = text.substr(2, text.size() - 3);
    if (shifted) return shifted_free_schur(StrictPartition::parse(inner), n, degree);
    return free_schur(Partition::parse(inner), n, degree);
  };
  const auto star = product.find('*');
  return {factor(std::string_view(product).substr(0, star)), factor(std::string_view(product).substr(star + 1))};
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<Word>> normalize(std::vector<std::vector<Word>> groups) {
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end());
  return groups;
}

std::string interval_text(const Interval& iv, const std::map<Letter, char>& symbols) {
  auto sym = [&](Letter a) {
    auto it = symbols.find(a);
    return it == symbols.end() ? std::to_string(a) : std::string(1, it->second);
  };
  return "I=[" + sym(iv.lo()) + "," + sym(iv.hi()) + "]";
}

}  // namespace

// ------------------------------------------------------------------ tables

TableFamily parse_family(std::string_view name) {
  if (name == "unshifted-1") return TableFamily::Unshifted1;
  if (name == "unshifted-2x1") return TableFamily::Unshifted2x1;
  if (name == "shifted-2") return TableFamily::Shifted2;
  if (name == "unshifted-3x1-table3") return TableFamily::Unshifted3x1;
  if (name == "bcc-table4") return TableFamily::Bcc;
  throw Error("unknown table family '" + std::string(name) + "'");
}

std::string family_name(TableFamily family) {
  switch (family) {
    case TableFamily::Unshifted1: return "unshifted-1";
    case TableFamily::Unshifted2x1: return "unshifted-2x1";
    case TableFamily::Shifted2: return "shifted-2";
    case TableFamily::Unshifted3x1: return "unshifted-3x1-table3";
    case TableFamily::Bcc: return "bcc-table4";
  }
  return "?";
}

std::vector<std::string> pattern_monomials(const NcPoly& left, const NcPoly& right, std::string_view pattern,
                                           std::span<const Letter> letters) {
  const auto vars = distinct_variables(pattern);
  if (vars.size() != letters.size()) throw Error("pattern needs one letter per distinct variable");
  const int n = left.context().alphabet_size;
  std::map<Letter, char> symbols;
  ContentVector target(n);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0 && letters[i] <= letters[i - 1]) throw Error("pattern letters must be strictly increasing");
    symbols.emplace(letters[i], vars[i]);
  }
  for (char v : pattern) target.add(letters[vars.find(v)]);
  std::vector<std::string> out;
  const auto product = nc_mul(left, right);
  for (const auto& [w, c] : product.terms()) {
    if (content(w) == target) out.push_back(render(w, symbols));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TableCase> verify_tables(TableFamily family, std::string_view pattern) {
  std::vector<TableCase> out;
  for (const auto& row : table_rows()) {
    if (row.family != family || (!pattern.empty() && row.pattern != pattern)) continue;
    const auto vars = distinct_variables(row.pattern);
    const int n = static_cast<int>(vars.size());
    const int degree = static_cast<int>(row.pattern.size());
    std::vector<Letter> letters(vars.size());
    std::iota(letters.begin(), letters.end(), Letter{1});
    const auto [a, b] = product_factors(row.product, n, degree);

    TableCase tc;
    tc.family = family_name(family);
    tc.product = row.product;
    tc.pattern = row.pattern;
    tc.expected = row.words;
    std::sort(tc.expected.begin(), tc.expected.end());
    tc.actual = pattern_monomials(a, b, row.pattern, letters);
    std::set_difference(tc.expected.begin(), tc.expected.end(), tc.actual.begin(), tc.actual.end(),
                        std::back_inserter(tc.missing));
    std::set_difference(tc.actual.begin(), tc.actual.end(), tc.expected.begin(), tc.expected.end(),
                        std::back_inserter(tc.extra));
    out.push_back(std::move(tc));
  }
  if (out.empty()) {
    throw Error("no tabulated pattern '" + std::string(pattern) + "' for family " + family_name(family));
  }
  return out;
}

// ------------------------------------------------------------------ matching

std::vector<Interval> separating_intervals(const Word& u, const Word& v, ClassIndex& knuth) {
  std::vector<Letter> used(u.begin(), u.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<Interval> out;
  for (std::size_t width = 1; width < used.size(); ++width) {
    for (std::size_t lo = 0; lo + width < used.size(); ++lo) {
      const Interval iv(used[lo], used[lo + width]);
      if (!knuth.equivalent(restrict(u, iv), restrict(v, iv))) out.push_back(iv);
    }
  }
  return out;
}

std::vector<ContentMatching> forced_matchings(const NcPoly& a, const NcPoly& b, ClassIndex& knuth) {
  const auto diff = nc_mul(a, b) - nc_mul(b, a);
  std::map<ContentVector, ContentMatching> groups;
  for (const auto& [w, c] : diff.terms()) {
    auto& g = groups[content(w)];
    auto& side = c > 0 ? g.left : g.right;
    for (Coeff k = 0; k < (c > 0 ? c : -c); ++k) side.push_back(w);
  }
  std::vector<ContentMatching> out;
  for (auto& [cv, g] : groups) {
    g.content = cv;
    g.compatible.assign(g.left.size(), std::vector<bool>(g.right.size(), false));
    for (std::size_t i = 0; i < g.left.size(); ++i) {
      for (std::size_t j = 0; j < g.right.size(); ++j) {
        g.compatible[i][j] = separating_intervals(g.left[i], g.right[j], knuth).empty();
      }
    }
    if (g.left.size() == g.right.size()) {
      std::vector<int> partner(g.left.size(), -1);
      std::vector<bool> used(g.right.size(), false);
      std::function<void(std::size_t)> search = [&](std::size_t i) {
        if (g.matchings >= 2) return;
        if (i == g.left.size()) {
          if (++g.matchings == 1) g.partner = partner;
          return;
        }
        for (std::size_t j = 0; j < g.right.size(); ++j) {
          if (used[j] || !g.compatible[i][j]) continue;
          used[j] = true;
          partner[i] = static_cast<int>(j);
          search(i + 1);
          used[j] = false;
        }
      };
      search(0);
    }
    if (!g.unique()) g.partner.clear();
    out.push_back(std::move(g));
  }
  return out;
}

// ------------------------------------------------------------------ cases

std::vector<CaseReport> verify_case_analysis(const RelationSet& rels) {
  int degree;
  std::function<std::pair<NcPoly, NcPoly>(int)> generators;
  if (rels.name() == "knuth") {
    degree = 3;
    generators = [](int n) {
      return std::pair{free_schur(Partition({1}), n, 3), free_schur(Partition({1, 1}), n, 3)};
    };
  } else if (rels.name() == "shifted-knuth") {
    degree = 4;
    generators = [](int n) {
      return std::pair{shifted_free_schur(StrictPartition({1}), n, 4), shifted_free_schur(StrictPartition({2, 1}), n, 4)};
    };
  } else {
    throw Error("case analysis is defined for knuth and shifted-knuth, not " + rels.name());
  }

  ClassIndex knuth(RelationSet::knuth());
  std::vector<CaseReport> out;
  for (const auto& comp : compositions(degree)) {
    const int n = static_cast<int>(comp.size());
    const ContentVector target(std::vector<int>(comp.begin(), comp.end()));
    const auto pattern = pattern_of(comp);
    const auto [a, b] = generators(n);
    for (const auto& cm : forced_matchings(a, b, knuth)) {
      if (cm.content != target) continue;
      for (std::size_t i = 0; i < cm.left.size(); ++i) {
        CaseReport rep;
        rep.left = cm.left[i];
        rep.candidates = cm.right;

        // Symbols: by default the pattern's own variables.
        std::map<Letter, char> symbols;
        for (int k = 0; k < n; ++k) symbols.emplace(static_cast<Letter>(k + 1), static_cast<char>('a' + k));

        if (cm.unique()) {
          const auto& v = cm.right[static_cast<std::size_t>(cm.partner[i])];
          rep.survivor = v;
          for (const auto& rel : rels.relations()) {
            auto image = instantiate(rel, rep.left);
            if (image && *image == v) rep.relation_ids.push_back(rel.id());
          }
          if (rep.relation_ids.empty()) {
            rep.failure = "survivor is not an instance of any relation";
          } else {
            const auto& rel = rels.relation(rep.relation_ids.front());
            rep.relation_id = rel.id();
            const auto values = *rel.match(rel.left(), rep.left.letters());
            const auto& vars = rel.chain_variables();
            symbols.clear();
            rep.letter_pattern = std::string(1, vars[0]);
            for (std::size_t k = 0; k < vars.size(); ++k) {
              symbols.emplace(values[k], vars[k]);
              if (k > 0) {
                rep.letter_pattern += values[k] == values[k - 1] ? "=" : "<";
                rep.letter_pattern.push_back(vars[k]);
              }
            }
          }
        } else {
          rep.failure = cm.matchings == 0 ? "no perfect matching" : "perfect matching is not unique";
        }
        if (rep.letter_pattern.empty()) rep.letter_pattern = pattern;

        rep.left_symbolic = render(rep.left, symbols);
        for (const auto& c : rep.candidates) rep.candidates_symbolic.push_back(render(c, symbols));
        if (rep.survivor) rep.survivor_symbolic = render(*rep.survivor, symbols);

        for (std::size_t j = 0; j < cm.right.size(); ++j) {
          if (cm.unique() && static_cast<int>(j) == cm.partner[i]) continue;
          Elimination e{cm.right[j], render(cm.right[j], symbols), {}};
          const auto ivs = separating_intervals(rep.left, cm.right[j], knuth);
          for (std::size_t k = 0; k < ivs.size(); ++k) {
            auto text = interval_text(ivs[k], symbols);
            if (k + 1 == ivs.size() && restrict(rep.left, ivs[k]) == rep.left) text += " (whole word)";
            e.reasons.push_back(std::move(text));
          }
          if (e.reasons.empty() && cm.unique()) {
            for (std::size_t k = 0; k < cm.left.size(); ++k) {
              if (cm.partner[k] == static_cast<int>(j)) {
                e.reasons.push_back("matched with " + render(cm.left[k], symbols));
              }
            }
          }
          rep.eliminated.push_back(std::move(e));
        }
        out.push_back(std::move(rep));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CaseReport& x, const CaseReport& y) {
    return std::tie(x.relation_id, x.letter_pattern, x.left) < std::tie(y.relation_id, y.letter_pattern, y.left);
  });
  return out;
}

bool regenerates_presentation(const std::vector<CaseReport>& reports, const RelationSet& rels) {
  std::size_t degree = 0;
  for (const auto& rel : rels.relations()) degree = std::max(degree, rel.length());
  using Pair = std::pair<Word, Word>;
  auto unordered = [](Word x, Word y) { return x < y ? Pair{x, y} : Pair{y, x}; };

  std::set<Pair> found;
  for (const auto& rep : reports) {
    if (!rep.passed() || !rep.survivor) return false;
    found.insert(unordered(rep.left, *rep.survivor));
  }
  std::set<Pair> expected;
  for (const auto& comp : compositions(static_cast<int>(degree))) {
    const int n = static_cast<int>(comp.size());
    const ContentVector target(std::vector<int>(comp.begin(), comp.end()));
    for (const auto& rel : rels.relations()) {
      for (const auto& [u, v] : relation_instances(rel, n)) {
        if (u != v && content(u) == target) expected.insert(unordered(u, v));
      }
    }
  }
  return found == expected;
}

// ------------------------------------------------------------------ axioms

std::vector<AxiomReport> verify_axioms(AxiomSystem system, const RelationSet& rels, int alphabet_size,
                                       int max_degree) {
  const bool shifted = system == AxiomSystem::ShiftedPlactic;
  const std::string prefix = shifted ? "SPlac." : "Plac.";
  ClassIndex phi(rels);
  ClassIndex knuth(RelationSet::knuth());

  // Distinct classes of every word of degree 1..D.
  std::vector<const EquivClass*> classes;
  {
    std::set<Word> seen;
    for (int d = 1; d <= max_degree; ++d) {
      for (const auto& w : all_words(alphabet_size, d)) {
        const auto& cls = phi.class_of(w);
        if (seen.insert(cls.representative()).second) classes.push_back(&cls);
      }
    }
  }

  auto make = [&](std::string id) {
    AxiomReport r;
    r.axiom_id = prefix + id;
    r.relation_set = rels.name();
    r.alphabet_size = alphabet_size;
    r.max_degree = max_degree;
    return r;
  };
  auto violate = [](AxiomReport& r, std::string what) {
    ++r.violation_count;
    if (r.violations.size() < kMaxWitnesses) r.violations.push_back(std::move(what));
  };

  std::vector<AxiomReport> out;

  // 1: the structure map recovers content (plactic) or the Knuth class (shifted).
  {
    auto r = make("1");
    r.note = shifted ? "every class lies inside one Knuth class" : "every class has a single content";
    for (const auto* cls : classes) {
      const auto& rep = cls->representative();
      for (const auto& m : cls->members) {
        ++r.instances_checked;
        const bool ok = shifted ? knuth.equivalent(m, rep) : content(m) == content(rep);
        if (!ok) violate(r, m.str() + " ~ " + rep.str());
      }
    }
    out.push_back(std::move(r));
  }

  // 2: commutation of the generating free Schur functions in the quotient.
  {
    auto r = make("2");
    const int needed = shifted ? 4 : 3;
    if (max_degree < needed) throw Error("axiom 2 needs a degree bound of at least " + std::to_string(needed));
    NcPoly a(Context{alphabet_size, max_degree});
    NcPoly b(Context{alphabet_size, max_degree});
    if (shifted) {
      a = shifted_free_schur(StrictPartition({1}), alphabet_size, max_degree);
      b = shifted_free_schur(StrictPartition({2, 1}), alphabet_size, max_degree);
      r.note = "P(1) and P(2,1) commute in the quotient";
    } else {
      a = free_schur(Partition({1}), alphabet_size, max_degree);
      b = free_schur(Partition({1, 1}), alphabet_size, max_degree);
      r.note = "S(1) and S(1,1) commute in the quotient";
    }
    const auto ab = nc_mul(a, b);
    r.instances_checked = static_cast<long long>(ab.terms().size());
    const auto comm = project_quotient(ab - nc_mul(b, a), phi);
    for (const auto& [w, c] : comm.terms()) violate(r, std::to_string(c) + "*[" + w.str() + "]");
    out.push_back(std::move(r));
  }

  // 3: stability under ordered morphisms between subalphabets of {1..n}.
  {
    auto r = make("3");
    r.note = "ordered morphisms map classes into classes";
    for (const auto* cls : classes) {
      const auto& rep = cls->representative();
      std::vector<Letter> support(rep.begin(), rep.end());
      std::sort(support.begin(), support.end());
      support.erase(std::unique(support.begin(), support.end()), support.end());
      for (const auto& omega : ordered_morphisms(support, alphabet_size)) {
        const auto rep_image = apply_morphism(rep, omega);
        for (const auto& m : cls->members) {
          ++r.instances_checked;
          if (!phi.equivalent(apply_morphism(m, omega), rep_image)) {
            violate(r, m.str() + " ~ " + rep.str() + " but images differ");
          }
        }
      }
    }
    out.push_back(std::move(r));
  }

  // 4: stability under interval restriction, with the Knuth target for the
  // shifted system; the shifted target itself is reported as a control.
  auto restriction_check = [&](AxiomReport r, ClassIndex& target) {
    for (const auto* cls : classes) {
      const auto& rep = cls->representative();
      for (int lo = 1; lo <= alphabet_size; ++lo) {
        for (int hi = lo; hi <= alphabet_size; ++hi) {
          const Interval iv(static_cast<Letter>(lo), static_cast<Letter>(hi));
          const auto rep_image = restrict(rep, iv);
          for (const auto& m : cls->members) {
            ++r.instances_checked;
            const auto image = restrict(m, iv);
            if (!target.equivalent(image, rep_image)) {
              violate(r, m.str() + " ~ " + rep.str() + " but on [" + std::to_string(lo) + "," + std::to_string(hi) +
                             "]: " + image.str() + " vs " + rep_image.str());
            }
          }
        }
      }
    }
    return r;
  };
  {
    auto r = make("4");
    r.note = shifted ? "restrictions of equivalent words are Knuth-equivalent"
                     : "restrictions of equivalent words are equivalent";
    out.push_back(restriction_check(std::move(r), shifted ? knuth : phi));
  }
  if (shifted) {
    auto r = make("4-sigma");
    r.informational = true;
    r.note = "control: restrictions compared under the shifted congruence itself";
    out.push_back(restriction_check(std::move(r), phi));
  }
  return out;
}

// ------------------------------------------------------------------ replacements

std::optional<std::vector<std::vector<Word>>> forced_partition(const NcPoly& a, const NcPoly& b, int degree,
                                                               std::string* witness) {
  const int n = a.context().alphabet_size;
  ClassIndex knuth(RelationSet::knuth());
  const auto words = all_words(n, degree);
  std::unordered_map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  UnionFind uf(words.size());
  for (const auto& cm : forced_matchings(a, b, knuth)) {
    if (cm.content.degree() != degree) continue;
    if (!cm.unique()) {
      if (witness) {
        *witness = "content " + cm.content.str() + ": " + std::to_string(cm.left.size()) + " vs " +
                   std::to_string(cm.right.size()) + " monomials, " +
                   (cm.matchings == 0 ? "no perfect matching" : "several perfect matchings");
      }
      return std::nullopt;
    }
    for (std::size_t i = 0; i < cm.left.size(); ++i) {
      uf.unite(index.at(cm.left[i]), index.at(cm.right[static_cast<std::size_t>(cm.partner[i])]));
    }
  }
  std::map<std::size_t, std::vector<Word>> groups;
  for (std::size_t i = 0; i < words.size(); ++i) groups[uf.find(i)].push_back(words[i]);
  std::vector<std::vector<Word>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return normalize(std::move(out));
}

std::vector<std::vector<Word>> class_partition(const RelationSet& rels, int alphabet_size, int degree) {
  ClassIndex index(rels);
  std::set<Word> seen;
  std::vector<std::vector<Word>> out;
  for (const auto& w : all_words(alphabet_size, degree)) {
    const auto& cls = index.class_of(w);
    if (seen.insert(cls.representative()).second) out.push_back(cls.members);
  }
  return normalize(std::move(out));
}

CheckResult replacement_free_identity(int alphabet_size, int max_degree) {
  CheckResult r{"replacement-free", "P(1)*P(2) = P(2)*P(1) in the free algebra", false, {}};
  const auto p1 = shifted_free_schur(StrictPartition({1}), alphabet_size, max_degree);
  const auto p2 = shifted_free_schur(StrictPartition({2}), alphabet_size, max_degree);
  const auto lhs = nc_mul(p1, p2);
  const auto rhs = nc_mul(p2, p1);
  r.passed = lhs == rhs;
  r.detail = "n=" + std::to_string(alphabet_size) + ", " + std::to_string(lhs.terms().size()) + " terms on each side" +
             (r.passed ? "" : ", difference has " + std::to_string((lhs - rhs).terms().size()) + " terms");
  return r;
}

namespace {

CheckResult compare_forced(std::string id, std::string description, const NcPoly& base, const NcPoly& original,
                           const NcPoly& replacement, int degree, const RelationSet& rels) {
  CheckResult r{std::move(id), std::move(description), false, {}};
  const int n = base.context().alphabet_size;
  std::string witness;
  const auto with_original = forced_partition(base, original, degree, &witness);
  if (!with_original) {
    r.detail = "original generator: " + witness;
    return r;
  }
  const auto with_replacement = forced_partition(base, replacement, degree, &witness);
  if (!with_replacement) {
    r.detail = "replacement generator: " + witness;
    return r;
  }
  const auto classes = class_partition(rels, n, degree);
  const bool same = *with_original == *with_replacement;
  const bool presentation = *with_replacement == classes;
  r.passed = same && presentation;
  r.detail = "n=" + std::to_string(n) + ", degree " + std::to_string(degree) + ": " +
             std::to_string(with_replacement->size()) + " forced classes, " + std::to_string(classes.size()) + " " +
             rels.name() + " classes" + (same ? "" : "; generators force different classes") +
             (presentation ? "" : "; forced classes differ from " + rels.name());
  return r;
}

}  // namespace

CheckResult replacement_unshifted(int alphabet_size) {
  const int n = alphabet_size;
  return compare_forced("replacement-unshifted", "S(2) in place of S(1,1) forces the Knuth classes",
                        free_schur(Partition({1}), n, 3), free_schur(Partition({1, 1}), n, 3),
                        free_schur(Partition({2}), n, 3), 3, RelationSet::knuth());
}

CheckResult replacement_shifted(int alphabet_size) {
  const int n = alphabet_size;
  return compare_forced("replacement-shifted", "P(3) in place of P(2,1) forces the shifted Knuth classes",
                        shifted_free_schur(StrictPartition({1}), n, 4), shifted_free_schur(StrictPartition({2, 1}), n, 4),
                        shifted_free_schur(StrictPartition({3}), n, 4), 4, RelationSet::shifted_knuth());
}

std::vector<CheckResult> verify_replacements(int alphabet_size, int max_degree) {
  if (alphabet_size < 4 || max_degree < 4) throw Error("replacement checks need n >= 4 and D >= 4");
  return {replacement_free_identity(alphabet_size, max_degree), replacement_unshifted(alphabet_size),
          replacement_shifted(alphabet_size)};
}

}  // namespace placto::verify
