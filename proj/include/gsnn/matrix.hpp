#pragma once

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "gsnn/scalar.hpp"

namespace gsnn {

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense row-major matrix over an exact rational or double scalar.
template <class S>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, S(0)) {}
  Mat(int rows, int cols, std::initializer_list<S> vals) : Mat(rows, cols) {
    assert(static_cast<size_t>(rows) * cols == vals.size());
    size_t k = 0;
    for (const S& v : vals) a_[k++] = v;
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<S> row(int i) const {
    std::vector<S> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  std::vector<S> col(int j) const {
    std::vector<S> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(int i, const std::vector<S>& r) {
    assert(static_cast<int>(r.size()) == cols_);
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product dimension mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& v = (*this)(i, k);
        if (ScalarTraits<S>::is_zero(v, 0.0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }
  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum dimension mismatch");
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference dimension mismatch");
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  Mat scaled(const S& s) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
  }

  std::vector<S> apply(const std::vector<S>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("matrix-vector dimension mismatch");
    std::vector<S> y(rows_, S(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  bool approx_eq(const Mat& o, double eps) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < a_.size(); ++k)
      if (!ScalarTraits<S>::eq(a_[k], o.a_[k], eps)) return false;
    return true;
  }
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<S> a_;
};

using MatQ = Mat<Rat>;
using MatD = Mat<double>;

template <class S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
  assert(a.size() == b.size());
  S s(0);
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

template <class S>
Mat<double> to_double(const Mat<S>& m) {
  Mat<double> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = ScalarTraits<S>::to_double(m(i, j));
  return r;
}

template <class S>
std::vector<double> to_double(const std::vector<S>& v) {
  std::vector<double> r(v.size());
  for (size_t k = 0; k < v.size(); ++k) r[k] = ScalarTraits<S>::to_double(v[k]);
  return r;
}

}  // namespace gsnn
