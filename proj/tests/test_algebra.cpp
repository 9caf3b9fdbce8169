#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <limits>

#include "doctest.h"
#include "oracles.hpp"
#include "placto/algebra.hpp"

using namespace placto;

namespace {

Word w(const char* s, int n) { return Word::parse(s, n); }

NcPoly poly(std::initializer_list<std::pair<const char*, Coeff>> terms, int n, int degree) {
  NcPoly p(Context{n, degree});
  for (const auto& [s, c] : terms) p.add_term(w(s, n), c);
  return p;
}

}  // namespace

TEST_CASE("checked arithmetic") {
  constexpr Coeff big = std::numeric_limits<Coeff>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(big, 1), Error);
  CHECK_THROWS_AS(checked_mul(big, 2), Error);
  CHECK(checked_mul(-4, 5) == -20);
}

TEST_CASE("polynomial arithmetic") {
  const int n = 2, D = 3;
  const auto x = poly({{"1", 1}}, n, D);
  const auto y = poly({{"2", 1}}, n, D);
  CHECK(nc_mul(x, y) == poly({{"12", 1}}, n, D));
  CHECK(nc_mul(x + y, x + y) == poly({{"11", 1}, {"12", 1}, {"21", 1}, {"22", 1}}, n, D));
  CHECK(nc_mul(x + y, NcPoly::unit(Context{n, D})) == x + y);
  CHECK((x - x).is_zero());
  CHECK((3 * x).coeff(w("1", n)) == 3);

  // Truncation drops over-degree terms.
  const auto cube = nc_mul(nc_mul(x, x), nc_mul(x, x));
  CHECK(cube.is_zero());
  auto p = NcPoly(Context{n, 1});
  p.add_term(w("12", n), 5);
  CHECK(p.is_zero());

  CHECK_THROWS_AS(nc_mul(x, poly({{"1", 1}}, 3, D)), Error);
  CHECK_THROWS_AS(x + poly({{"1", 1}}, n, 4), Error);
  NcPoly q(Context{n, D});
  CHECK_THROWS_AS(q.add_term(w("1", 3), 1), Error);
}

TEST_CASE("free Schur functions") {
  CHECK(free_schur(Partition({1}), 2, 1) == poly({{"1", 1}, {"2", 1}}, 2, 1));
  CHECK(free_schur(Partition({1, 1}), 3, 2) == poly({{"21", 1}, {"31", 1}, {"32", 1}}, 3, 2));
  CHECK(free_schur(Partition({2}), 2, 2) == poly({{"11", 1}, {"12", 1}, {"22", 1}}, 2, 2));
  CHECK(free_schur(Partition({1, 1, 1}), 2, 3).is_zero());
  CHECK(free_schur(Partition(), 2, 2) == NcPoly::unit(Context{2, 2}));
  CHECK_THROWS_AS(free_schur(Partition({2, 1}), 3, 2), Error);

  for (int m = 0; m <= 5; ++m) {
    for (const auto& nu : partitions_of(m)) {
      for (int n = 1; n <= 4; ++n) {
        const auto fast = free_schur(nu, n, m);
        CHECK(fast == free_schur_by_factorization(nu, n, m));
        for (const auto& [word, c] : fast.terms()) CHECK(c == 1);
      }
    }
  }
}

TEST_CASE("shifted free Schur functions") {
  CHECK(shifted_free_schur(StrictPartition({2, 1}), 2, 3) == poly({{"121", 1}, {"221", 1}}, 2, 3));
  CHECK(shifted_free_schur(StrictPartition({1}), 3, 1) == poly({{"1", 1}, {"2", 1}, {"3", 1}}, 3, 1));
  CHECK(shifted_free_schur(StrictPartition({2}), 2, 2).terms().size() == 4);
  for (int m = 1; m <= 5; ++m) {
    for (const auto& nu : strict_partitions_of(m)) {
      const auto p = shifted_free_schur(nu, 3, m);
      for (const auto& [word, c] : p.terms()) CHECK(c == 1);
    }
  }
}

TEST_CASE("quotient projection") {
  const auto knuth = RelationSet::knuth();
  const auto shifted = RelationSet::shifted_knuth();
  const auto p = project_quotient(poly({{"132", 1}, {"312", 1}}, 3, 3), knuth);
  CHECK(p.terms().size() == 1);
  CHECK(p.coeff(w("132", 3)) == 2);
  CHECK(project_quotient(poly({{"12", 1}}, 3, 3), knuth).coeff(w("12", 3)) == 1);
  CHECK(project_quotient(poly({{"1243", 1}, {"1423", -1}}, 4, 4), shifted).is_zero());
}

TEST_CASE("abelianization") {
  CHECK(abelianize(poly({{"12", 1}, {"21", 1}}, 2, 2)).coeff(ContentVector(std::vector<int>{1, 1})) == 2);
  CHECK(abelianize(free_schur(Partition({1, 1}), 3, 2)) == schur_poly(Partition({1, 1}), 3));
  CHECK(schur_poly(Partition({1}), 2).str() == "x1 + x2");
  CHECK(schur_poly(Partition({2, 1}), 2).str() == "x1^2*x2 + x1*x2^2");
  // P(2,1) in two variables: only 1 2'/2 has content x1*x2^2, since 1 2/2 repeats 2 in a column.
  CHECK(p_schur_poly(StrictPartition({2, 1}), 2).str() == "x1^2*x2 + x1*x2^2");
  CHECK(abelianize(shifted_free_schur(StrictPartition({2, 1}), 2, 3)) == p_schur_poly(StrictPartition({2, 1}), 2));
}

TEST_CASE("Schur polynomials agree with the bialternant formula") {
  const std::vector<std::vector<long long>> points = {{2, 3, 5, 7}, {1, 2, 3, 4}, {-1, 2, -3, 5}};
  for (int m = 0; m <= 5; ++m) {
    for (const auto& nu : partitions_of(m)) {
      for (const auto& x : points) {
        const auto s = schur_poly(nu, 4);
        CHECK(oracle::eval(s, x) == oracle::schur_at(nu, x));
        CHECK(oracle::eval(abelianize(free_schur(nu, 4, m)), x) == oracle::schur_at(nu, x));
      }
    }
  }
}

TEST_CASE("commutators vanish in the quotient") {
  const auto s1 = free_schur(Partition({1}), 3, 3);
  const auto s11 = free_schur(Partition({1, 1}), 3, 3);
  CHECK_FALSE(nc_mul(s1, s11) == nc_mul(s11, s1));
  CHECK(commutator_in_quotient(s1, s11, RelationSet::knuth()).is_zero());
  CHECK_FALSE(commutator_in_quotient(s1, s11, RelationSet::by_name("free")).is_zero());

  const auto p1 = shifted_free_schur(StrictPartition({1}), 4, 4);
  const auto p21 = shifted_free_schur(StrictPartition({2, 1}), 4, 4);
  CHECK_FALSE(nc_mul(p1, p21) == nc_mul(p21, p1));
  CHECK(commutator_in_quotient(p1, p21, RelationSet::shifted_knuth()).is_zero());
  CHECK_FALSE(commutator_in_quotient(p1, p21, RelationSet::by_name("free")).is_zero());

  const auto p2 = shifted_free_schur(StrictPartition({2}), 4, 4);
  CHECK(commutator_in_quotient(p1, p2, RelationSet::by_name("free")).is_zero());
}

TEST_CASE("Littlewood-Richardson expansion") {
  using M = std::map<Partition, Coeff>;
  CHECK(lr_expand(Partition({1}), Partition({1}), 4) == M{{Partition({2}), 1}, {Partition({1, 1}), 1}});
  CHECK(lr_expand(Partition({2, 1}), Partition(), 4) == M{{Partition({2, 1}), 1}});
  CHECK(lr_expand(Partition({2, 1}), Partition({1}), 4) ==
        M{{Partition({3, 1}), 1}, {Partition({2, 2}), 1}, {Partition({2, 1, 1}), 1}});
  // Over two letters the three-row shape disappears.
  CHECK(lr_expand(Partition({2, 1}), Partition({1}), 2) == M{{Partition({3, 1}), 1}, {Partition({2, 2}), 1}});
  CHECK(lr_expand(Partition({2, 1}), Partition({2, 1}), 4).at(Partition({3, 2, 1})) == 2);
}
