#include "gsnn/verify.hpp"

#include <numeric>

namespace gsnn {

namespace {

struct Row {
  std::vector<double> w;
  double b;
  double a;
};

}  // namespace

CanonicalForm canonicalize(const SNNInstance<double>& inst, double parallel_eps,
                           double zero_eps) {
  const int m = inst.W.cols();
  CanonicalForm cf;
  cf.c.assign(m, 0.0);
  for (int j = 0; j < m; ++j) cf.c[j] = inst.c[j];
  cf.d = inst.d;

  std::vector<Row> rows;
  for (int i = 0; i < inst.W.rows(); ++i) {
    Row r{inst.W.row(i), inst.b[i], inst.a[i]};
    if (std::fabs(r.a) <= zero_eps) continue;
    double n = detail::norm2(r.w);
    if (n <= zero_eps) {
      cf.d += r.a * std::max(0.0, r.b);  // constant neuron folds into d
      continue;
    }
    for (double& x : r.w) x /= n;
    r.b /= n;
    r.a *= n;
    // Flip into the fundamental domain; relu(u) = relu(-u) + u contributes
    // the affine part of the flipped neuron.
    int first = 0;
    while (first < m && std::fabs(r.w[first]) <= zero_eps) ++first;
    if (first < m && r.w[first] < 0) {
      for (int j = 0; j < m; ++j) cf.c[j] += r.a * r.w[j];
      cf.d += r.a * r.b;
      for (double& x : r.w) x = -x;
      r.b = -r.b;
    }
    rows.push_back(std::move(r));
  }

  // Merge rows whose augmented vectors coincide (all flipped, so parallel
  // augmented rows are equal up to tolerance).
  std::vector<Row> merged;
  for (Row& r : rows) {
    bool absorbed = false;
    for (Row& q : merged) {
      double cos = 0;
      for (int j = 0; j < m; ++j) cos += q.w[j] * r.w[j];
      if (cos >= 1.0 - parallel_eps && std::fabs(q.b - r.b) <= parallel_eps) {
        q.a += r.a;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(std::move(r));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [&](const Row& r) { return std::fabs(r.a) <= zero_eps; }),
               merged.end());

  // Tolerant lexicographic order: distinct canonical rows are far apart, but
  // renormalization may perturb equal coordinates by an ulp, so exact ties
  // must not flip.
  const double sort_eps = 1e-9;
  std::stable_sort(merged.begin(), merged.end(), [&](const Row& x, const Row& y) {
    for (int j = 0; j < m; ++j)
      if (std::fabs(x.w[j] - y.w[j]) > sort_eps) return x.w[j] < y.w[j];
    return x.b < y.b - sort_eps;
  });

  cf.n_star = static_cast<int>(merged.size());
  cf.W = MatD(cf.n_star, m);
  cf.b.resize(cf.n_star);
  cf.a.resize(cf.n_star);
  for (int i = 0; i < cf.n_star; ++i) {
    cf.W.set_row(i, merged[i].w);
    cf.b[i] = merged[i].b;
    cf.a[i] = merged[i].a;
  }
  return cf;
}

bool relu_identity_check(const std::vector<double>& samples) {
  for (double x : samples) {
    for (int z : {-1, 1}) {
      double lhs = std::max(0.0, x) - std::max(0.0, z * x);
      double rhs = (-z > 0 ? 1.0 : 0.0) * x;
      if (std::fabs(lhs - rhs) > 1e-15) return false;
    }
  }
  return true;
}

}  // namespace gsnn
