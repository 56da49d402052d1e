#pragma once

#include <stdexcept>
#include <vector>

namespace l2t {

// Dense matrix over a group ring (or any ring type with rank()). Entries of
// an empty matrix still need a rank, so it is stored explicitly.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, int rank)
      : rows_(rows), cols_(cols), rank_(rank),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), T(rank)) {}

  static Mat identity(int n, int rank) {
    Mat m(n, n, rank);
    for (int i = 0; i < n; ++i) m.at(i, i) = T::one(rank);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int rank() const { return rank_; }
  bool is_square() const { return rows_ == cols_; }

  T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_) if (!x.is_zero()) return false;
    return true;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_ || rank_ != o.rank_) throw std::invalid_argument("matrix shape mismatch");
    Mat r(rows_, o.cols_, rank_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Mat operator-(const Mat& o) const { return *this + (-o); }

  // Transpose with the ring involution applied entrywise (the matrix of the
  // dual map between based free modules).
  Mat involute_transpose() const {
    Mat r(cols_, rows_, rank_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).involute();
    return r;
  }

  Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Mat r(static_cast<int>(rows.size()), static_cast<int>(cols.size()), rank_);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && rank_ == o.rank_ && a_ == o.a_;
  }

 private:
  int rows_ = 0, cols_ = 0, rank_ = 0;
  std::vector<T> a_;
};

}  // namespace l2t
