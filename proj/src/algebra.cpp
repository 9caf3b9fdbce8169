#include "placto/algebra.hpp"

#include <sstream>

namespace placto {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("coefficient overflow");
  return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("coefficient overflow");
  return out;
}

namespace {

template <typename Key>
void accumulate(std::map<Key, Coeff>& terms, const Key& key, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

}  // namespace

// ---------------------------------------------------------------- NcPoly

NcPoly NcPoly::unit(Context ctx) { return monomial(Word(ctx.alphabet_size), 1, ctx); }

NcPoly NcPoly::monomial(const Word& w, Coeff c, Context ctx) {
  NcPoly p(ctx);
  p.add_term(w, c);
  return p;
}

Coeff NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void NcPoly::add_term(const Word& w, Coeff c) {
  if (w.alphabet_size() != ctx_.alphabet_size) {
    throw Error("word " + w.str() + " is over alphabet " + std::to_string(w.alphabet_size()) +
                ", polynomial context has " + std::to_string(ctx_.alphabet_size));
  }
  if (static_cast<int>(w.size()) > ctx_.max_degree) return;
  accumulate(terms_, w, c);
}

void NcPoly::check_context(const NcPoly& other) const {
  if (!(ctx_ == other.ctx_)) {
    throw Error("polynomial contexts differ: (n=" + std::to_string(ctx_.alphabet_size) +
                ", D=" + std::to_string(ctx_.max_degree) + ") vs (n=" + std::to_string(other.ctx_.alphabet_size) +
                ", D=" + std::to_string(other.ctx_.max_degree) + ")");
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
  check_context(other);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
  check_context(other);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, checked_mul(-1, c));
  return *this;
}

NcPoly operator*(Coeff k, const NcPoly& p) {
  NcPoly out(p.ctx_);
  for (const auto& [w, c] : p.terms_) accumulate(out.terms_, w, checked_mul(k, c));
  return out;
}

NcPoly nc_mul(const NcPoly& p, const NcPoly& q) {
  if (!(p.context() == q.context())) throw Error("nc_mul: polynomial contexts differ");
  NcPoly out(p.context());
  const auto bound = static_cast<std::size_t>(p.context().max_degree);
  for (const auto& [u, a] : p.terms()) {
    for (const auto& [v, b] : q.terms()) {
      if (u.size() + v.size() > bound) continue;
      out.add_term(concat(u, v), checked_mul(a, b));
    }
  }
  return out;
}

// ---------------------------------------------------------------- CPoly / QuotientPoly

Coeff CPoly::coeff(const ContentVector& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

void CPoly::add_term(const ContentVector& c, Coeff k) { accumulate(terms_, c, k); }

std::string CPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [c, k] = *it;
    if (!first) out << (k < 0 ? " - " : " + ");
    else if (k < 0) out << "-";
    first = false;
    const Coeff mag = k < 0 ? -k : k;
    if (mag != 1 || c.degree() == 0) out << mag << (c.degree() == 0 ? "" : "*");
    if (c.degree() != 0) out << c.str();
  }
  return out.str();
}

Coeff QuotientPoly::coeff(const Word& representative) const {
  auto it = terms_.find(representative);
  return it == terms_.end() ? 0 : it->second;
}

void QuotientPoly::add_term(const Word& representative, Coeff c) { accumulate(terms_, representative, c); }

// ---------------------------------------------------------------- Schur functions

NcPoly free_schur(const Partition& nu, int alphabet_size, int max_degree) {
  if (nu.size() > max_degree) throw Error("free_schur: |nu| exceeds the degree bound");
  NcPoly out(Context{alphabet_size, max_degree});
  if (nu.length() > alphabet_size) return out;
  for (const auto& t : enumerate_ssyt(nu, alphabet_size)) out.add_term(reading_word(t, alphabet_size), 1);
  return out;
}

NcPoly free_schur_by_factorization(const Partition& nu, int alphabet_size, int max_degree) {
  if (nu.size() > max_degree) throw Error("free_schur: |nu| exceeds the degree bound");
  NcPoly out(Context{alphabet_size, max_degree});
  for (const auto& w : all_words(alphabet_size, nu.size())) {
    if (increasing_factorization_check(w, nu)) out.add_term(w, 1);
  }
  return out;
}

NcPoly shifted_free_schur(const StrictPartition& nu, int alphabet_size, int max_degree) {
  if (nu.size() > max_degree) throw Error("shifted_free_schur: |nu| exceeds the degree bound");
  NcPoly out(Context{alphabet_size, max_degree});
  for (const auto& w : enumerate_hook(nu, alphabet_size)) out.add_term(w, 1);
  return out;
}

// ---------------------------------------------------------------- projections

QuotientPoly project_quotient(const NcPoly& p, ClassIndex& index) {
  QuotientPoly out(index.relations().name());
  for (const auto& [w, c] : p.terms()) out.add_term(index.canonical(w), c);
  return out;
}

QuotientPoly project_quotient(const NcPoly& p, const RelationSet& rels) {
  ClassIndex index(rels);
  return project_quotient(p, index);
}

CPoly abelianize(const NcPoly& p) {
  CPoly out;
  for (const auto& [w, c] : p.terms()) out.add_term(content(w), c);
  return out;
}

CPoly schur_poly(const Partition& nu, int alphabet_size) {
  CPoly out;
  for (const auto& t : enumerate_ssyt(nu, alphabet_size)) {
    ContentVector c(alphabet_size);
    for (const auto& row : t.rows) {
      for (auto a : row) c.add(a);
    }
    out.add_term(c, 1);
  }
  return out;
}

CPoly p_schur_poly(const StrictPartition& nu, int alphabet_size) {
  CPoly out;
  for (const auto& t : enumerate_shssyt(nu, alphabet_size)) {
    ContentVector c(alphabet_size);
    for (const auto& row : t.rows) {
      for (auto a : row) c.add(a.base);
    }
    out.add_term(c, 1);
  }
  return out;
}

QuotientPoly commutator_in_quotient(const NcPoly& pa, const NcPoly& pb, ClassIndex& index) {
  return project_quotient(nc_mul(pa, pb) - nc_mul(pb, pa), index);
}

QuotientPoly commutator_in_quotient(const NcPoly& pa, const NcPoly& pb, const RelationSet& rels) {
  ClassIndex index(rels);
  return commutator_in_quotient(pa, pb, index);
}

std::map<Partition, Coeff> lr_expand(const Partition& nu, const Partition& mu, int alphabet_size) {
  const int degree = nu.size() + mu.size();
  ClassIndex index(RelationSet::knuth());
  auto remainder = project_quotient(
      nc_mul(free_schur(nu, alphabet_size, degree), free_schur(mu, alphabet_size, degree)), index);

  std::map<Partition, Coeff> out;
  for (const auto& xi : partitions_of(degree)) {
    if (xi.length() > alphabet_size) continue;
    // The row-superstandard tableau of shape xi lies in exactly one S_xi.
    Tableau key;
    for (int r = 0; r < xi.length(); ++r) {
      key.rows.emplace_back(static_cast<std::size_t>(xi[static_cast<std::size_t>(r)]), static_cast<Letter>(r + 1));
    }
    const Coeff c = remainder.coeff(index.canonical(reading_word(key, alphabet_size)));
    if (c == 0) continue;
    if (c < 0) throw std::logic_error("lr_expand: negative coefficient for shape " + xi.str());
    out.emplace(xi, c);
    auto correction = project_quotient(checked_mul(-1, c) * free_schur(xi, alphabet_size, degree), index);
    for (const auto& [w, k] : correction.terms()) remainder.add_term(w, k);
  }
  if (!remainder.is_zero()) {
    throw std::logic_error("lr_expand: nonzero remainder after exhausting shapes");
  }
  return out;
}

}  // namespace placto
