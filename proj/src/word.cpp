#include "placto/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace placto {

namespace {

void check_alphabet(int alphabet_size) {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
    throw Error("alphabet size must be in 1.." + std::to_string(kMaxAlphabet) + ", got " +
                std::to_string(alphabet_size));
  }
}

std::vector<int> parse_letters(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  const bool comma = text.find(',') != std::string_view::npos;
  if (!comma) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw Error("bad character in word: '" + std::string(1, ch) + "'");
      out.push_back(ch - '0');
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto token = text.substr(pos, next - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error("bad letter in word: '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

}  // namespace

Word::Word(int alphabet_size) : alphabet_size_(alphabet_size) { check_alphabet(alphabet_size); }

Word::Word(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
  for (auto a : letters_) {
    if (a < 1 || a > alphabet_size) {
      throw Error("letter " + std::to_string(a) + " outside alphabet {1.." + std::to_string(alphabet_size) + "}");
    }
  }
}

Word::Word(std::initializer_list<int> letters, int alphabet_size) : alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
  letters_.reserve(letters.size());
  for (int a : letters) {
    if (a < 1 || a > alphabet_size) {
      throw Error("letter " + std::to_string(a) + " outside alphabet {1.." + std::to_string(alphabet_size) + "}");
    }
    letters_.push_back(static_cast<Letter>(a));
  }
}

Word Word::parse(std::string_view text, int alphabet_size) {
  check_alphabet(alphabet_size);
  auto values = parse_letters(text);
  std::vector<Letter> letters;
  letters.reserve(values.size());
  for (int v : values) {
    if (v < 1 || v > alphabet_size) {
      throw Error("letter " + std::to_string(v) + " outside alphabet {1.." + std::to_string(alphabet_size) + "}");
    }
    letters.push_back(static_cast<Letter>(v));
  }
  return Word(std::move(letters), alphabet_size);
}

Word Word::parse(std::string_view text) {
  auto values = parse_letters(text);
  int n = 1;
  for (int v : values) n = std::max(n, v);
  return parse(text, std::min(n, kMaxAlphabet + 1));
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (alphabet_size_ <= 9) {
      out.push_back(static_cast<char>('0' + letters_[i]));
    } else {
      if (i > 0) out.push_back(',');
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
  return a.alphabet_size_ <=> b.alphabet_size_;
}

int ContentVector::degree() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::string ContentVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    if (!out.empty()) out.push_back('*');
    out += "x" + std::to_string(i + 1);
    if (counts_[i] > 1) out += "^" + std::to_string(counts_[i]);
  }
  return out.empty() ? "1" : out;
}

Interval::Interval(Letter lo, Letter hi) : lo_(lo), hi_(hi) {
  if (lo < 1 || lo > hi) {
    throw Error("bad interval [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

OrderedMorphism::OrderedMorphism(std::vector<std::pair<Letter, Letter>> mapping, int target_size)
    : mapping_(std::move(mapping)), target_size_(target_size) {
  check_alphabet(target_size);
  std::sort(mapping_.begin(), mapping_.end());
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    const auto [src, dst] = mapping_[i];
    if (src < 1 || dst < 1 || dst > target_size) throw Error("ordered morphism letter out of range");
    if (i > 0 && (mapping_[i - 1].first == src || mapping_[i - 1].second >= dst)) {
      throw Error("ordered morphism must be a strictly increasing function");
    }
  }
}

OrderedMorphism OrderedMorphism::identity(int alphabet_size) {
  std::vector<std::pair<Letter, Letter>> m;
  for (int a = 1; a <= alphabet_size; ++a) m.emplace_back(static_cast<Letter>(a), static_cast<Letter>(a));
  return OrderedMorphism(std::move(m), alphabet_size);
}

bool OrderedMorphism::in_source(Letter a) const {
  auto it = std::lower_bound(mapping_.begin(), mapping_.end(), std::pair<Letter, Letter>{a, 0});
  return it != mapping_.end() && it->first == a;
}

Letter OrderedMorphism::operator()(Letter a) const {
  auto it = std::lower_bound(mapping_.begin(), mapping_.end(), std::pair<Letter, Letter>{a, 0});
  if (it == mapping_.end() || it->first != a) {
    throw Error("letter " + std::to_string(a) + " is not in the morphism's source");
  }
  return it->second;
}

Word concat(const Word& w1, const Word& w2) {
  if (w1.alphabet_size() != w2.alphabet_size()) {
    throw Error("concat: alphabet sizes differ (" + std::to_string(w1.alphabet_size()) + " vs " +
                std::to_string(w2.alphabet_size()) + ")");
  }
  std::vector<Letter> out(w1.begin(), w1.end());
  out.insert(out.end(), w2.begin(), w2.end());
  return Word(std::move(out), w1.alphabet_size());
}

ContentVector content(const Word& w) {
  ContentVector c(w.alphabet_size());
  for (auto a : w) c.add(a);
  return c;
}

Word restrict(const Word& w, const Interval& interval) {
  std::vector<Letter> out;
  for (auto a : w) {
    if (interval.contains(a)) out.push_back(a);
  }
  return Word(std::move(out), w.alphabet_size());
}

Word apply_morphism(const Word& w, const OrderedMorphism& omega) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto a : w) out.push_back(omega(a));
  return Word(std::move(out), omega.target_size());
}

std::vector<Word> all_words(int alphabet_size, int degree) {
  std::vector<Word> out;
  std::vector<Letter> cur(static_cast<std::size_t>(degree), 1);
  while (true) {
    out.emplace_back(cur, alphabet_size);
    int i = degree - 1;
    while (i >= 0 && cur[i] == alphabet_size) cur[i--] = 1;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<OrderedMorphism> ordered_morphisms(std::span<const Letter> source, int target_size) {
  std::vector<OrderedMorphism> out;
  const auto k = source.size();
  if (k > static_cast<std::size_t>(target_size)) return out;
  // Strictly increasing maps are determined by their image set.
  std::vector<Letter> image(k);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int next) {
    if (i == k) {
      std::vector<std::pair<Letter, Letter>> m;
      for (std::size_t j = 0; j < k; ++j) m.emplace_back(source[j], image[j]);
      out.emplace_back(std::move(m), target_size);
      return;
    }
    for (int v = next; v <= target_size - static_cast<int>(k - i - 1); ++v) {
      image[i] = static_cast<Letter>(v);
      rec(i + 1, v + 1);
    }
  };
  rec(0, 1);
  return out;
}

}  // namespace placto
