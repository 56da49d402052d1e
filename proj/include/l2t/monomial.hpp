#pragma once

#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "l2t/ints.hpp"

namespace l2t {

// Element of the free abelian group Z^dim, written multiplicatively. Plays
// the same role for Laurent-polynomial rings that Word plays for free-group
// rings; both satisfy the group-element interface used by GroupRing.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int dim) : e_(static_cast<std::size_t>(dim), 0) {}
  explicit Monomial(std::vector<std::int64_t> exps) : e_(std::move(exps)) {}

  static Monomial identity(int dim) { return Monomial(dim); }
  static Monomial gen_pow(int dim, int gen, std::int64_t exp) {
    if (gen < 1 || gen > dim) throw std::out_of_range("generator index out of range");
    Monomial m(dim);
    m.e_[static_cast<std::size_t>(gen - 1)] = exp;
    return m;
  }

  int rank() const { return static_cast<int>(e_.size()); }
  bool is_identity() const {
    for (auto v : e_) if (v != 0) return false;
    return true;
  }
  const std::vector<std::int64_t>& exps() const { return e_; }

  Monomial operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("monomial dim mismatch");
    Monomial m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
  }
  Monomial inverse() const {
    Monomial m = *this;
    for (auto& v : m.e_) v = -v;
    return m;
  }
  Monomial pow(std::int64_t k) const {
    Monomial m = *this;
    for (auto& v : m.e_) v *= k;
    return m;
  }

  const std::vector<std::int64_t>& abelian() const { return e_; }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = e_.size() <=> o.e_.size(); c != 0) return c;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (auto c = e_[i] <=> o.e_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>()(e_.size());
    for (auto v : e_) h = hash_mix(h, std::hash<std::int64_t>()(v));
    return h;
  }

  std::string str() const {
    bool any = false;
    std::ostringstream os;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (any) os << "*";
      any = true;
      os << "t" << (i + 1);
      if (e_[i] != 1) os << "^" << e_[i];
    }
    return any ? os.str() : "1";
  }

 private:
  std::vector<std::int64_t> e_;
};

}  // namespace l2t
