#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "l2t/ints.hpp"

namespace l2t {

struct Letter {
  int gen;   // 1-based generator index
  int sign;  // +1 or -1
};

// Freely reduced word in the free group of a given rank, stored run-length
// compressed as (generator, nonzero exponent) blocks with adjacent blocks on
// distinct generators. The empty block list is the identity.
class Word {
 public:
  using Block = std::pair<int, std::int64_t>;

  Word() = default;
  explicit Word(int rank) : rank_(rank) {}

  static Word identity(int rank) { return Word(rank); }
  // Single generator power x_gen^exp.
  static Word gen_pow(int rank, int gen, std::int64_t exp);
  static Word from_letters(int rank, const std::vector<Letter>& letters);
  // Merges adjacent blocks and drops zero exponents (full free reduction).
  static Word from_blocks(int rank, std::vector<Block> blocks);

  int rank() const { return rank_; }
  bool is_identity() const { return blocks_.empty(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  // Word length as a reduced letter string.
  std::int64_t length() const;
  std::vector<Letter> letters() const;

  Word operator*(const Word& o) const;
  Word inverse() const;
  Word pow(std::int64_t e) const;

  // Exponent-sum vector in Z^rank (image in the free abelianization).
  std::vector<std::int64_t> abelian() const;

  bool operator==(const Word& o) const {
    return rank_ == o.rank_ && blocks_ == o.blocks_;
  }

  // ShortLex: shorter first, then letterwise with x1 < x1^-1 < x2 < ...
  std::strong_ordering operator<=>(const Word& o) const;

  std::size_t hash() const;
  std::string str() const;

  // Token grammar: `x<k>` or `x<k>^<e>` separated by whitespace or `*`;
  // single letters a..z (uppercase = inverse) also accepted; `1` or an empty
  // string is the identity.
  static Word parse(int rank, const std::string& text);

 private:
  int rank_ = 0;
  std::vector<Block> blocks_;

  void check_rank(const Word& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("word rank mismatch");
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace l2t
