#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "gsnn/matrix.hpp"

namespace gsnn {

// Basis of a linear subspace of R^ambient_dim.
// Exact mode stores the unique reduced row-echelon basis, so two bases of the
// same subspace compare equal entrywise. Float mode stores an orthonormal
// basis (unique only up to rotation; comparisons go through subspace_leq).
template <class S>
struct SubspaceBasis {
  int ambient_dim = 0;
  std::vector<std::vector<S>> vectors;

  int dim() const { return static_cast<int>(vectors.size()); }
};

namespace detail {

// In-place reduced row echelon form over exact rationals. Returns pivot columns.
inline std::vector<int> rref(std::vector<std::vector<Rat>>& rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (sgn(rows[i][c]) != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][c];
    for (int j = c; j < cols; ++j) rows[r][j] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rat f = rows[i][c];
      for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size(), std::vector<Rat>(cols, Rat(0)));
  return pivots;
}

inline double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Orthonormal basis of the span of the given vectors (modified Gram-Schmidt,
// pivoting on the largest residual). Vectors with residual below `pivot_eps`
// are treated as dependent.
inline std::vector<std::vector<double>> orthonormalize(std::vector<std::vector<double>> vs,
                                                       double pivot_eps) {
  std::vector<std::vector<double>> q;
  while (true) {
    int best = -1;
    double best_norm = pivot_eps;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
      double n = norm2(vs[i]);
      if (n > best_norm) { best_norm = n; best = i; }
    }
    if (best < 0) break;
    std::vector<double> u = vs[best];
    for (double& x : u) x /= best_norm;
    q.push_back(u);
    vs.erase(vs.begin() + best);
    for (auto& v : vs) {
      double proj = 0;
      for (size_t k = 0; k < v.size(); ++k) proj += v[k] * u[k];
      for (size_t k = 0; k < v.size(); ++k) v[k] -= proj * u[k];
    }
  }
  return q;
}

}  // namespace detail

// Basis of the span of the given vectors.
template <class S>
SubspaceBasis<S> span_basis(int ambient_dim, std::vector<std::vector<S>> vectors, double pivot_eps);

inline SubspaceBasis<Rat> span_basis(int ambient_dim, std::vector<std::vector<Rat>> vectors,
                                     double = 0.0) {
  detail::rref(vectors, ambient_dim);
  return SubspaceBasis<Rat>{ambient_dim, std::move(vectors)};
}

inline SubspaceBasis<double> span_basis(int ambient_dim, std::vector<std::vector<double>> vectors,
                                        double pivot_eps = 1e-9) {
  return SubspaceBasis<double>{ambient_dim, detail::orthonormalize(std::move(vectors), pivot_eps)};
}

// Basis of the column space of P.
template <class S>
SubspaceBasis<S> range_basis(const Mat<S>& P, double pivot_eps = 1e-9) {
  std::vector<std::vector<S>> cols;
  cols.reserve(P.cols());
  for (int j = 0; j < P.cols(); ++j) cols.push_back(P.col(j));
  return span_basis(P.rows(), std::move(cols), pivot_eps);
}

// True iff v lies in span(B).
inline bool in_span(const SubspaceBasis<Rat>& B, const std::vector<Rat>& v, double = 0.0) {
  std::vector<std::vector<Rat>> rows = B.vectors;
  rows.push_back(v);
  detail::rref(rows, B.ambient_dim);
  return static_cast<int>(rows.size()) == B.dim();
}

inline bool in_span(const SubspaceBasis<double>& B, const std::vector<double>& v, double eps = 1e-9) {
  std::vector<double> r = v;
  for (const auto& u : B.vectors) {
    double proj = 0;
    for (size_t k = 0; k < r.size(); ++k) proj += r[k] * u[k];
    for (size_t k = 0; k < r.size(); ++k) r[k] -= proj * u[k];
  }
  return detail::norm2(r) <= eps * std::max(1.0, detail::norm2(v));
}

template <class S>
bool subspace_leq(const SubspaceBasis<S>& A, const SubspaceBasis<S>& B, double eps = 1e-9) {
  if (A.ambient_dim != B.ambient_dim) throw DimensionMismatch("subspace ambient dimension mismatch");
  for (const auto& v : A.vectors)
    if (!in_span(B, v, eps)) return false;
  return true;
}

template <class S>
bool subspace_eq(const SubspaceBasis<S>& A, const SubspaceBasis<S>& B, double eps = 1e-9) {
  if constexpr (ScalarTraits<S>::exact) {
    return A.ambient_dim == B.ambient_dim && A.vectors == B.vectors;  // echelon form is canonical
  } else {
    return A.dim() == B.dim() && subspace_leq(A, B, eps) && subspace_leq(B, A, eps);
  }
}

// Solve A X = B for square nonsingular exact A.
inline MatQ solve_linear(const MatQ& A, const MatQ& B) {
  const int n = A.rows();
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(n + B.cols(), Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = A(i, j);
    for (int j = 0; j < B.cols(); ++j) aug[i][n + j] = B(i, j);
  }
  std::vector<int> pivots = detail::rref(aug, n + B.cols());
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw std::runtime_error("solve_linear: singular system");
  MatQ X(n, B.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < B.cols(); ++j) X(i, j) = aug[i][n + j];
  return X;
}

// Orthogonal projector with range exactly span(V).
inline MatQ projector_onto(const SubspaceBasis<Rat>& V) {
  const int m = V.ambient_dim;
  if (V.dim() == 0) return MatQ::zero(m, m);
  MatQ B(m, V.dim());
  for (int j = 0; j < V.dim(); ++j)
    for (int i = 0; i < m; ++i) B(i, j) = V.vectors[j][i];
  MatQ Bt = B.transpose();
  MatQ X = solve_linear(Bt * B, Bt);  // (B^T B)^{-1} B^T
  return B * X;
}

inline MatD projector_onto(const SubspaceBasis<double>& V) {
  const int m = V.ambient_dim;
  MatD P = MatD::zero(m, m);
  for (const auto& u : V.vectors)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) P(i, j) += u[i] * u[j];
  return P;
}

// Null space basis of A (exact mode), i.e. {x : A x = 0}.
inline SubspaceBasis<Rat> null_space(const MatQ& A) {
  const int n = A.cols();
  std::vector<std::vector<Rat>> rows;
  rows.reserve(A.rows());
  for (int i = 0; i < A.rows(); ++i) rows.push_back(A.row(i));
  std::vector<int> pivots = detail::rref(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[c] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][c];
    basis.push_back(std::move(v));
  }
  return span_basis(n, std::move(basis));
}

}  // namespace gsnn
