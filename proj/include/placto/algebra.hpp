#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "placto/rewrite.hpp"
#include "placto/tableau.hpp"
#include "placto/word.hpp"

namespace placto {

/// Integer coefficients. Arithmetic is checked: overflow throws instead of
/// wrapping, so every value that is produced is exact.
using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// Alphabet size and degree bound shared by polynomials that interact.
struct Context {
  int alphabet_size = 1;
  int max_degree = 0;
  friend bool operator==(const Context&, const Context&) = default;
};

/// Degree-truncated element of the free monoid algebra: words to integers,
/// no zero coefficients stored.
class NcPoly {
 public:
  explicit NcPoly(Context ctx) : ctx_(ctx) {}
  static NcPoly unit(Context ctx);
  static NcPoly monomial(const Word& w, Coeff c, Context ctx);

  [[nodiscard]] const Context& context() const { return ctx_; }
  [[nodiscard]] const std::map<Word, Coeff>& terms() const { return terms_; }
  [[nodiscard]] Coeff coeff(const Word& w) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Adds c·w; words above the degree bound are dropped.
  void add_term(const Word& w, Coeff c);

  NcPoly& operator+=(const NcPoly& other);
  NcPoly& operator-=(const NcPoly& other);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(Coeff k, const NcPoly& p);
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  void check_context(const NcPoly& other) const;

  Context ctx_;
  std::map<Word, Coeff> terms_;
};

/// Commutative image: content vectors to integers.
class CPoly {
 public:
  [[nodiscard]] const std::map<ContentVector, Coeff>& terms() const { return terms_; }
  [[nodiscard]] Coeff coeff(const ContentVector& c) const;
  void add_term(const ContentVector& c, Coeff k);
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::string str() const;
  friend bool operator==(const CPoly&, const CPoly&) = default;

 private:
  std::map<ContentVector, Coeff> terms_;
};

/// Element of a quotient monoid algebra, keyed by canonical class
/// representatives (lexicographically least member).
class QuotientPoly {
 public:
  explicit QuotientPoly(std::string relation_set) : relation_set_(std::move(relation_set)) {}
  [[nodiscard]] const std::string& relation_set() const { return relation_set_; }
  [[nodiscard]] const std::map<Word, Coeff>& terms() const { return terms_; }
  [[nodiscard]] Coeff coeff(const Word& representative) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& representative, Coeff c);
  friend bool operator==(const QuotientPoly&, const QuotientPoly&) = default;

 private:
  std::string relation_set_;
  std::map<Word, Coeff> terms_;
};

/// Concatenation product; terms above the degree bound are dropped.
NcPoly nc_mul(const NcPoly& p, const NcPoly& q);

/// Sum of reading words of SSYT(nu).
NcPoly free_schur(const Partition& nu, int alphabet_size, int max_degree);
/// Sum of words whose weakly increasing factorization has lengths
/// nu_l, ..., nu_1 with each factor longest in its pair.
NcPoly free_schur_by_factorization(const Partition& nu, int alphabet_size, int max_degree);
/// Sum of hook(nu).
NcPoly shifted_free_schur(const StrictPartition& nu, int alphabet_size, int max_degree);

QuotientPoly project_quotient(const NcPoly& p, ClassIndex& index);
QuotientPoly project_quotient(const NcPoly& p, const RelationSet& rels);

CPoly abelianize(const NcPoly& p);
CPoly schur_poly(const Partition& nu, int alphabet_size);
CPoly p_schur_poly(const StrictPartition& nu, int alphabet_size);

/// Image of pA·pB − pB·pA in the quotient; zero certifies commutation.
QuotientPoly commutator_in_quotient(const NcPoly& pa, const NcPoly& pb, ClassIndex& index);
QuotientPoly commutator_in_quotient(const NcPoly& pa, const NcPoly& pb, const RelationSet& rels);

/// Coefficients of the plactic product of free Schur functions in the
/// plactic Schur basis.
std::map<Partition, Coeff> lr_expand(const Partition& nu, const Partition& mu, int alphabet_size);

}  // namespace placto
