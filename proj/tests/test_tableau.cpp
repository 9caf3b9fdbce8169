#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "placto/rewrite.hpp"
#include "placto/tableau.hpp"

using namespace placto;

namespace {

Word w(const char* s, int n) { return Word::parse(s, n); }

PrimedLetter pl(const char* s) { return PrimedLetter::parse(s); }

ShiftedTableau shifted(std::vector<std::vector<const char*>> rows) {
  ShiftedTableau t;
  for (const auto& r : rows) {
    t.rows.emplace_back();
    for (const char* s : r) t.rows.back().push_back(pl(s));
  }
  return t;
}

// Longest hook subsequence by trying every subset.
int brute_longest_hook(std::span<const Letter> s) {
  int best = 0;
  const std::size_t n = s.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Letter> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(s[i]);
    }
    if (is_hook_word(sub)) best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

// Hook word check straight from the definition: some split d|i.
bool brute_is_hook(std::span<const Letter> s) {
  for (std::size_t k = 0; k <= s.size(); ++k) {
    bool ok = true;
    for (std::size_t i = 1; i < k; ++i) ok = ok && s[i] < s[i - 1];
    for (std::size_t i = k + 1; i < s.size(); ++i) ok = ok && s[i - 1] <= s[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(Partition::parse("2,1").str() == "2,1");
  CHECK(Partition::parse("").size() == 0);
  CHECK(Partition::parse("0").length() == 0);
  CHECK(Partition::parse("3,1,0").length() == 2);
  CHECK_THROWS_AS(Partition::parse("1,2"), Error);
  CHECK_THROWS_AS(Partition::parse("2,x"), Error);
  CHECK_THROWS_AS(StrictPartition::parse("2,2"), Error);
  CHECK(StrictPartition::parse("3,1").size() == 4);

  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(4).front() == Partition({4}));
  CHECK(partitions_of(4).back() == Partition({1, 1, 1, 1}));
  CHECK(strict_partitions_of(6).size() == 4);  // 6, 51, 42, 321
  CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("schensted insertion") {
  CHECK(schensted_insert({}, 3).rows == std::vector<std::vector<Letter>>{{3}});
  CHECK(schensted_insert(Tableau{{{3}}}, 1).rows == std::vector<std::vector<Letter>>{{1}, {3}});
  CHECK(schensted_insert(Tableau{{{1}, {3}}}, 2).rows == std::vector<std::vector<Letter>>{{1, 2}, {3}});
  CHECK(p_tableau(w("312", 3)).rows == std::vector<std::vector<Letter>>{{1, 2}, {3}});
  CHECK(p_tableau(w("132", 3)) == p_tableau(w("312", 3)));
  CHECK(p_tableau(w("", 3)).rows.empty());
  // Equal letters do not bump each other.
  CHECK(p_tableau(w("2212", 2)).rows == std::vector<std::vector<Letter>>{{1, 2, 2}, {2}});
}

TEST_CASE("reading words") {
  CHECK(reading_word(Tableau{{{1, 2}, {3}}}, 3).str() == "312");
  CHECK(reading_word(Tableau{{{1, 1, 2}}}, 3).str() == "112");
  const Tableau example{{{1, 1, 1, 2, 4, 6, 7}, {2, 5, 5, 5, 5}, {4, 9}}};
  CHECK(example.is_semistandard());
  CHECK(reading_word(example, 9).str() == "49" "25555" "1112467");
  for (const auto& word : all_words(3, 5)) {
    const auto t = p_tableau(word);
    CHECK(t.is_semistandard());
    CHECK(p_tableau(reading_word(t, 3)) == t);
  }
}

TEST_CASE("mixed insertion reproduces the worked example") {
  const auto before = shifted({{"1", "3", "6'"}, {"4", "7"}, {"8"}});
  REQUIRE(before.is_valid());
  const auto after = mixed_insert(before, pl("2"));
  CHECK(after == shifted({{"1", "2", "4'", "6'"}, {"3", "7"}, {"8"}}));
  CHECK(after.is_valid());
}

TEST_CASE("mixed insertion basics") {
  CHECK(mixed_insert_word(w("1", 1)) == shifted({{"1"}}));
  CHECK(mixed_insert_word(w("21", 2)) == shifted({{"1", "2'"}}));
  CHECK(mixed_insert_word(w("12", 2)) == shifted({{"1", "2"}}));
  CHECK(mixed_insert_word(w("", 2)).rows.empty());
  CHECK_THROWS_AS(mixed_insert({}, pl("2'")), Error);
  for (int d = 1; d <= 6; ++d) {
    for (const auto& word : all_words(3, d)) {
      const auto t = mixed_insert_word(word);
      CHECK(t.is_valid());
      CHECK(t.size() == d);
    }
  }
}

TEST_CASE("primed letters order a' < a < b'") {
  CHECK(pl("1'") < pl("1"));
  CHECK(pl("1") < pl("2'"));
  CHECK(pl("4'").str() == "4'");
  CHECK_THROWS_AS(pl("x"), Error);
  CHECK_THROWS_AS(pl("0"), Error);
}

TEST_CASE("hook words") {
  CHECK(is_hook_word(w("4213", 4).letters()));
  CHECK(is_hook_word(w("12", 2).letters()));
  CHECK_FALSE(is_hook_word(w("121", 2).letters()));
  CHECK(is_hook_word(w("", 2).letters()));
  for (int d = 0; d <= 5; ++d) {
    for (const auto& word : all_words(3, d)) CHECK(is_hook_word(word.letters()) == brute_is_hook(word.letters()));
  }
  // Every word of length 2 is a hook word.
  for (const auto& word : all_words(4, 2)) CHECK(is_hook_word(word.letters()));
}

TEST_CASE("longest hook subword against subset enumeration") {
  CHECK(longest_hook_subword(w("3142", 4).letters()) == 3);
  CHECK(longest_hook_subword(w("1123", 3).letters()) == 4);
  CHECK(longest_hook_subword(w("243", 4).letters()) == brute_longest_hook(w("243", 4).letters()));
  for (int d = 0; d <= 6; ++d) {
    for (const auto& word : all_words(3, d)) {
      CHECK(longest_hook_subword(word.letters()) == brute_longest_hook(word.letters()));
    }
  }
}

TEST_CASE("hook factorization") {
  const StrictPartition nu({2, 1});
  CHECK(hook_factorization_check(w("132", 3), nu));
  CHECK(hook_factorization_check(w("121", 2), nu));
  CHECK_FALSE(hook_factorization_check(w("123", 3), nu));
  CHECK_THROWS_AS(hook_factorization_check(w("12", 2), nu), Error);
}

TEST_CASE("hook enumeration") {
  CHECK(enumerate_hook(StrictPartition({2, 1}), 2) == std::vector<Word>{w("121", 2), w("221", 2)});
  CHECK(enumerate_hook(StrictPartition({1}), 3) == std::vector<Word>{w("1", 3), w("2", 3), w("3", 3)});
  CHECK(enumerate_hook(StrictPartition({2}), 2).size() == 4);
  for (int m = 1; m <= 6; ++m) {
    for (const auto& nu : strict_partitions_of(m)) {
      for (int n = 1; n <= 4; ++n) {
        if (m == 6 && n == 4) continue;
        CHECK(enumerate_hook(nu, n) == enumerate_hook_by_filter(nu, n));
      }
    }
  }
}

TEST_CASE("increasing factorization") {
  CHECK(increasing_factorization_check(w("312", 3), Partition({2, 1})));
  CHECK_FALSE(increasing_factorization_check(w("123", 3), Partition({2, 1})));
  CHECK(increasing_factorization_check(w("21", 2), Partition({1, 1})));
  CHECK_THROWS_AS(increasing_factorization_check(w("21", 2), Partition({2, 1})), Error);
}

TEST_CASE("tableau enumeration") {
  CHECK(enumerate_ssyt(Partition({1, 1}), 2).size() == 1);
  CHECK(enumerate_ssyt(Partition({2}), 2).size() == 3);
  CHECK(enumerate_ssyt(Partition({2, 1}), 3).size() == 8);
  CHECK(enumerate_ssyt(Partition({1, 1, 1}), 2).empty());
  for (const auto& t : enumerate_ssyt(Partition({3, 2}), 3)) CHECK(t.is_semistandard());

  // Shifted (2,1) over {1,2}: the diagonal is unprimed, so rows are 1 x / 2.
  const auto sh = enumerate_shssyt(StrictPartition({2, 1}), 2);
  CHECK(sh.size() == 2);
  for (const auto& t : sh) {
    CHECK(t.is_valid());
    CHECK(t.at(0, 0) == pl("1"));
  }
  for (const auto& t : enumerate_shssyt(StrictPartition({3, 1}), 3)) CHECK(t.is_valid());
}

TEST_CASE("shifted tableau validity") {
  CHECK(shifted({{"1", "2'", "2"}}).is_valid());
  CHECK_FALSE(shifted({{"1'", "2"}}).is_valid());          // primed diagonal
  CHECK_FALSE(shifted({{"1", "2'", "2'"}}).is_valid());    // repeated primed in a row
  CHECK_FALSE(shifted({{"1", "2"}, {"2"}}).is_valid());    // repeated unprimed in a column
  CHECK_FALSE(shifted({{"1", "2"}, {"3"}, {"4"}}).is_valid());  // shape not strict
  CHECK(shifted({{"1", "2'"}, {"2"}}).is_valid());
}
