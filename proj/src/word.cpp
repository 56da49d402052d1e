#include "l2t/word.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace l2t {

namespace {

void push_block(std::vector<Word::Block>& out, int gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().first == gen) {
    out.back().second += exp;
    if (out.back().second == 0) out.pop_back();
    return;
  }
  out.emplace_back(gen, exp);
}

}  // namespace

Word Word::gen_pow(int rank, int gen, std::int64_t exp) {
  if (gen < 1 || gen > rank) throw std::out_of_range("generator index out of range");
  Word w(rank);
  if (exp != 0) w.blocks_.emplace_back(gen, exp);
  return w;
}

Word Word::from_blocks(int rank, std::vector<Block> blocks) {
  Word w(rank);
  for (const auto& [g, e] : blocks) {
    if (g < 1 || g > rank) throw std::out_of_range("generator index out of range");
    push_block(w.blocks_, g, e);
  }
  return w;
}

Word Word::from_letters(int rank, const std::vector<Letter>& letters) {
  std::vector<Block> blocks;
  blocks.reserve(letters.size());
  for (const auto& l : letters) blocks.emplace_back(l.gen, l.sign);
  return from_blocks(rank, std::move(blocks));
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& [g, e] : blocks_) n += e < 0 ? -e : e;
  return n;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const auto& [g, e] : blocks_) {
    int s = e < 0 ? -1 : 1;
    for (std::int64_t i = 0, n = e < 0 ? -e : e; i < n; ++i) out.push_back({g, s});
  }
  return out;
}

Word Word::operator*(const Word& o) const {
  check_rank(o);
  Word w(rank_);
  w.blocks_ = blocks_;
  // Cancellation can cascade across block boundaries; merge with a stack.
  for (const auto& [g, e] : o.blocks_) {
    std::int64_t rem = e;
    while (rem != 0 && !w.blocks_.empty() && w.blocks_.back().first == g) {
      w.blocks_.back().second += rem;
      rem = 0;
      if (w.blocks_.back().second == 0) w.blocks_.pop_back();
    }
    if (rem != 0) w.blocks_.emplace_back(g, rem);
  }
  return w;
}

Word Word::inverse() const {
  Word w(rank_);
  w.blocks_.reserve(blocks_.size());
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it)
    w.blocks_.emplace_back(it->first, -it->second);
  return w;
}

Word Word::pow(std::int64_t e) const {
  if (e == 0) return Word(rank_);
  Word base = e < 0 ? inverse() : *this;
  std::int64_t n = e < 0 ? -e : e;
  Word acc(rank_);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::vector<std::int64_t> Word::abelian() const {
  std::vector<std::int64_t> v(static_cast<std::size_t>(rank_), 0);
  for (const auto& [g, e] : blocks_) v[static_cast<std::size_t>(g - 1)] += e;
  return v;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = length() <=> o.length(); c != 0) return c;
  // Letterwise comparison on the implicit letter sequence.
  auto key = [](int gen, std::int64_t exp) {
    return 2 * (gen - 1) + (exp < 0 ? 1 : 0);
  };
  std::size_t i = 0, j = 0;
  std::int64_t icnt = 0, jcnt = 0;
  while (i < blocks_.size() && j < o.blocks_.size()) {
    int a = key(blocks_[i].first, blocks_[i].second);
    int b = key(o.blocks_[j].first, o.blocks_[j].second);
    if (a != b) return a <=> b;
    std::int64_t ia = std::abs(blocks_[i].second) - icnt;
    std::int64_t jb = std::abs(o.blocks_[j].second) - jcnt;
    std::int64_t step = ia < jb ? ia : jb;
    icnt += step;
    jcnt += step;
    if (icnt == std::abs(blocks_[i].second)) { ++i; icnt = 0; }
    if (jcnt == std::abs(o.blocks_[j].second)) { ++j; jcnt = 0; }
  }
  return std::strong_ordering::equal;
}

std::size_t Word::hash() const {
  std::size_t h = std::hash<int>()(rank_);
  for (const auto& [g, e] : blocks_) {
    h = hash_mix(h, std::hash<int>()(g));
    h = hash_mix(h, std::hash<std::int64_t>()(e));
  }
  return h;
}

std::string Word::str() const {
  if (blocks_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : blocks_) {
    if (!first) os << "*";
    first = false;
    os << "x" << g;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

Word Word::parse(int rank, const std::string& text) {
  std::vector<Block> blocks;
  std::size_t i = 0;
  auto skip_sep = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  auto parse_int = [&](const char* what) -> std::int64_t {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw std::invalid_argument(std::string("expected integer after ") + what);
    return std::strtoll(text.substr(start, i - start).c_str(), nullptr, 10);
  };
  skip_sep();
  while (i < text.size()) {
    char c = text[i];
    if (c == '1') {
      ++i;
    } else if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      ++i;
      std::int64_t g = parse_int("x");
      std::int64_t e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = parse_int("^");
      }
      if (g < 1 || g > rank) throw std::out_of_range("generator index out of range");
      blocks.emplace_back(static_cast<int>(g), e);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      // Letter run: a..z generators, uppercase = inverse. A trailing ^e is
      // accepted for a single letter only.
      std::size_t start = i;
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != 'x') ++i;
      std::size_t run = i - start;
      if (run == 0) throw std::invalid_argument("unexpected 'x' inside letter run");
      std::int64_t e = 1;
      if (i < text.size() && text[i] == '^') {
        if (run != 1) throw std::invalid_argument("exponent on multi-letter run");
        ++i;
        e = parse_int("^");
      }
      for (std::size_t k = start; k < start + run; ++k) {
        char lc = text[k];
        int gen;
        int sign;
        if (std::islower(static_cast<unsigned char>(lc))) {
          gen = lc - 'a' + 1;
          sign = 1;
        } else {
          gen = lc - 'A' + 1;
          sign = -1;
        }
        if (gen < 1 || gen > rank) throw std::out_of_range("generator index out of range");
        blocks.emplace_back(gen, sign * (run == 1 ? e : 1));
      }
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
    }
    skip_sep();
  }
  return from_blocks(rank, std::move(blocks));
}

}  // namespace l2t
