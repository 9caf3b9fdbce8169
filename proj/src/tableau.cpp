#include "placto/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>

namespace placto {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error("partition parts must be positive: " + str());
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must weakly decrease: " + str());
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty() || text == "0") return Partition();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto token = text.substr(pos, next - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error("bad partition text '" + std::string(text) + "'");
    }
    if (v != 0) parts.push_back(v);
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_strict() const {
  return std::adjacent_find(parts_.begin(), parts_.end(), std::less_equal<>()) == parts_.end();
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(parts_[i]);
  }
  return out.empty() ? "0" : out;
}

StrictPartition::StrictPartition(std::vector<int> parts) : partition_(std::move(parts)) {
  if (!partition_.is_strict()) throw Error("partition is not strict: " + partition_.str());
}

StrictPartition StrictPartition::parse(std::string_view text) {
  const auto p = Partition::parse(text);
  return StrictPartition(std::vector<int>(p.parts().begin(), p.parts().end()));
}

namespace {

void partitions_rec(int remaining, int max_part, bool strict, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, strict ? p - 1 : p, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(m, m, false, cur, out);
  return out;
}

std::vector<StrictPartition> strict_partitions_of(int m) {
  std::vector<Partition> all;
  std::vector<int> cur;
  partitions_rec(m, m, true, cur, all);
  std::vector<StrictPartition> out;
  for (const auto& p : all) out.emplace_back(std::vector<int>(p.parts().begin(), p.parts().end()));
  return out;
}

// ---------------------------------------------------------------- tableaux

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int s = 0;
  for (const auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.empty()) return false;
    if (i > 0 && r.size() > rows[i - 1].size()) return false;
    if (!std::is_sorted(r.begin(), r.end())) return false;
    if (i > 0) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (rows[i - 1][j] >= r[j]) return false;
      }
    }
  }
  return true;
}

std::string PrimedLetter::str() const { return std::to_string(base) + (primed ? "'" : ""); }

PrimedLetter PrimedLetter::parse(std::string_view text) {
  bool primed = !text.empty() && text.back() == '\'';
  if (primed) text.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || v < 1 || v > kMaxAlphabet) {
    throw Error("bad primed letter '" + std::string(text) + "'");
  }
  return PrimedLetter{static_cast<Letter>(v), primed};
}

Partition ShiftedTableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int ShiftedTableau::size() const {
  int s = 0;
  for (const auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

bool ShiftedTableau::is_valid() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() >= rows[r - 1].size()) return false;
    if (row.front().primed) return false;
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (row[j] < row[j - 1]) return false;
      if (row[j] == row[j - 1] && row[j].primed) return false;
    }
    if (r > 0) {
      for (std::size_t c = r; c < r + row.size(); ++c) {
        const auto& up = at(r - 1, c);
        const auto& cur = at(r, c);
        if (cur < up) return false;
        if (cur == up && !cur.primed) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- insertion

Tableau schensted_insert(Tableau t, Letter z) {
  for (auto& row : t.rows) {
    auto it = std::upper_bound(row.begin(), row.end(), z);
    if (it == row.end()) {
      row.push_back(z);
      return t;
    }
    std::swap(*it, z);
  }
  t.rows.push_back({z});
  return t;
}

Tableau p_tableau(const Word& w) {
  Tableau t;
  for (auto a : w) t = schensted_insert(std::move(t), a);
  return t;
}

Word reading_word(const Tableau& t, int alphabet_size) {
  std::vector<Letter> out;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return Word(std::move(out), alphabet_size);
}

ShiftedTableau mixed_insert(ShiftedTableau t, PrimedLetter z) {
  if (z.primed) throw Error("mixed insertion takes unprimed letters, got " + z.str());
  enum class Mode { Row, Column };
  Mode mode = Mode::Row;
  std::size_t target = 0;  // row index or absolute column index
  PrimedLetter x = z;
  auto& rows = t.rows;

  auto route = [&](PrimedLetter bumped, std::size_t r, std::size_t c) {
    if (!bumped.primed && c != r) {
      mode = Mode::Row;
      target = r + 1;
    } else {
      bumped.primed = true;
      mode = Mode::Column;
      target = c + 1;
    }
    x = bumped;
  };

  while (true) {
    if (mode == Mode::Row) {
      const std::size_t r = target;
      if (r == rows.size()) {
        rows.push_back({x});
        return t;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        return t;
      }
      const std::size_t c = r + static_cast<std::size_t>(it - row.begin());
      const PrimedLetter bumped = *it;
      *it = x;
      route(bumped, r, c);
    } else {
      const std::size_t c = target;
      std::size_t height = 0;
      while (height < rows.size() && height <= c && height + rows[height].size() > c) ++height;
      std::size_t r = 0;
      while (r < height && !(x < rows[r][c - r])) ++r;
      if (r == height) {
        if (height < rows.size() && height + rows[height].size() == c) {
          rows[height].push_back(x);
        } else if (height == rows.size() && height == c) {
          rows.push_back({x});
        } else {
          throw std::logic_error("mixed insertion: column placement leaves the shifted shape");
        }
        return t;
      }
      const PrimedLetter bumped = rows[r][c - r];
      rows[r][c - r] = x;
      route(bumped, r, c);
    }
  }
}

ShiftedTableau mixed_insert_word(const Word& w) {
  ShiftedTableau t;
  for (auto a : w) t = mixed_insert(std::move(t), PrimedLetter{a, false});
  return t;
}

// ---------------------------------------------------------------- hook words

bool is_hook_word(std::span<const Letter> w) {
  if (w.empty()) return true;
  std::size_t dec_end = 1;  // w[0..dec_end) strictly decreasing
  while (dec_end < w.size() && w[dec_end] < w[dec_end - 1]) ++dec_end;
  std::size_t inc_begin = w.size() - 1;  // w[inc_begin..) weakly increasing
  while (inc_begin > 0 && w[inc_begin - 1] <= w[inc_begin]) --inc_begin;
  return inc_begin <= dec_end;
}

int longest_weakly_increasing(std::span<const Letter> w) {
  std::vector<int> best(w.size(), 1);
  int out = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (w[j] <= w[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    out = std::max(out, best[i]);
  }
  return out;
}

int longest_hook_subword(std::span<const Letter> w) {
  const std::size_t n = w.size();
  // dec[i]: longest strictly decreasing subsequence ending at i.
  // inc[i]: longest weakly increasing subsequence starting at i.
  std::vector<int> dec(n, 1), inc(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (w[j] > w[i]) dec[i] = std::max(dec[i], dec[j] + 1);
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (w[i] <= w[j]) inc[i] = std::max(inc[i], inc[j] + 1);
    }
  }
  // Best over split points p: decreasing part inside w[0..p), increasing in w[p..n).
  std::vector<int> inc_from(n + 1, 0);
  for (std::size_t p = n; p-- > 0;) inc_from[p] = std::max(inc_from[p + 1], inc[p]);
  int best = inc_from[0];
  int dec_before = 0;
  for (std::size_t p = 1; p <= n; ++p) {
    dec_before = std::max(dec_before, dec[p - 1]);
    best = std::max(best, dec_before + inc_from[p]);
  }
  return best;
}

namespace {

template <typename SegmentOk, typename Longest>
bool factorization_check(std::span<const Letter> w, std::span<const int> parts, SegmentOk segment_ok,
                         Longest longest) {
  std::size_t pos = 0;
  std::size_t prev_begin = 0;
  for (std::size_t k = parts.size(); k-- > 0;) {
    const auto len = static_cast<std::size_t>(parts[k]);
    auto seg = w.subspan(pos, len);
    if (!segment_ok(seg)) return false;
    if (k + 1 < parts.size()) {
      auto joined = w.subspan(prev_begin, pos + len - prev_begin);
      if (longest(joined) != static_cast<int>(len)) return false;
    }
    prev_begin = pos;
    pos += len;
  }
  return true;
}

}  // namespace

bool hook_factorization_check(const Word& w, const StrictPartition& nu) {
  if (static_cast<int>(w.size()) != nu.size()) {
    throw Error("hook factorization: word of length " + std::to_string(w.size()) + " against shape of size " +
                std::to_string(nu.size()));
  }
  return factorization_check(w.letters(), nu.parts(), is_hook_word, longest_hook_subword);
}

bool increasing_factorization_check(const Word& w, const Partition& nu) {
  if (static_cast<int>(w.size()) != nu.size()) {
    throw Error("increasing factorization: word of length " + std::to_string(w.size()) +
                " against shape of size " + std::to_string(nu.size()));
  }
  auto weakly_increasing = [](std::span<const Letter> s) { return std::is_sorted(s.begin(), s.end()); };
  return factorization_check(w.letters(), nu.parts(), weakly_increasing, longest_weakly_increasing);
}

namespace {

// Hook words of length k: a strictly decreasing run followed by a weakly increasing run.
std::vector<std::vector<Letter>> hook_words(int k, int n) {
  std::set<std::vector<Letter>> out;
  std::vector<Letter> cur;
  std::function<void(int, int)> inc = [&](int remaining, int min_letter) {
    if (remaining == 0) {
      out.insert(cur);
      return;
    }
    for (int a = min_letter; a <= n; ++a) {
      cur.push_back(static_cast<Letter>(a));
      inc(remaining - 1, a);
      cur.pop_back();
    }
  };
  std::function<void(int, int, int)> dec = [&](int dec_len, int remaining, int max_letter) {
    if (dec_len == 0) {
      inc(remaining, 1);
      return;
    }
    for (int a = max_letter; a >= 1; --a) {
      cur.push_back(static_cast<Letter>(a));
      dec(dec_len - 1, remaining, a - 1);
      cur.pop_back();
    }
  };
  for (int d = 0; d <= std::min(k, n); ++d) dec(d, k - d, n);
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Word> enumerate_hook(const StrictPartition& nu, int alphabet_size) {
  std::vector<std::vector<Letter>> words{{}};
  std::size_t prev_len = 0;
  for (std::size_t k = static_cast<std::size_t>(nu.length()); k-- > 0;) {
    const int len = nu[k];
    const auto segments = hook_words(len, alphabet_size);
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : words) {
      for (const auto& seg : segments) {
        if (k + 1 < static_cast<std::size_t>(nu.length())) {
          std::vector<Letter> joined(prefix.end() - static_cast<std::ptrdiff_t>(prev_len), prefix.end());
          joined.insert(joined.end(), seg.begin(), seg.end());
          if (longest_hook_subword(joined) != len) continue;
        }
        auto w = prefix;
        w.insert(w.end(), seg.begin(), seg.end());
        next.push_back(std::move(w));
      }
    }
    words = std::move(next);
    prev_len = static_cast<std::size_t>(len);
  }
  std::vector<Word> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(std::move(w), alphabet_size);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> enumerate_hook_by_filter(const StrictPartition& nu, int alphabet_size) {
  std::vector<Word> out;
  for (auto& w : all_words(alphabet_size, nu.size())) {
    if (hook_factorization_check(w, nu)) out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------- enumeration

std::vector<Tableau> enumerate_ssyt(const Partition& nu, int alphabet_size) {
  std::vector<Tableau> out;
  Tableau t;
  for (int len : nu.parts()) t.rows.emplace_back(static_cast<std::size_t>(len), Letter{0});
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) cells.emplace_back(r, c);
  }
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == cells.size()) {
      out.push_back(t);
      return;
    }
    const auto [r, c] = cells[i];
    int lo = 1;
    if (c > 0) lo = std::max(lo, int{t.rows[r][c - 1]});
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int v = lo; v <= alphabet_size; ++v) {
      t.rows[r][c] = static_cast<Letter>(v);
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

std::vector<ShiftedTableau> enumerate_shssyt(const StrictPartition& nu, int alphabet_size) {
  std::vector<ShiftedTableau> out;
  ShiftedTableau t;
  for (int len : nu.parts()) t.rows.emplace_back(static_cast<std::size_t>(len));
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // (row, absolute column)
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t j = 0; j < t.rows[r].size(); ++j) cells.emplace_back(r, r + j);
  }
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == cells.size()) {
      out.push_back(t);
      return;
    }
    const auto [r, c] = cells[i];
    for (int key = 1; key <= 2 * alphabet_size; ++key) {
      const PrimedLetter v{static_cast<Letter>((key + 1) / 2), key % 2 == 1};
      if (c == r && v.primed) continue;
      if (c > r) {
        const auto& left = t.rows[r][c - r - 1];
        if (v < left || (v == left && v.primed)) continue;
      }
      if (r > 0) {
        const auto& up = t.rows[r - 1][c - r + 1];
        if (v < up || (v == up && !v.primed)) continue;
      }
      t.rows[r][c - r] = v;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

}  // namespace placto
