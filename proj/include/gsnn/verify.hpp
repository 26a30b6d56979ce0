#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gsnn/architect.hpp"
#include "gsnn/group.hpp"

namespace gsnn {

template <class S>
S relu(const S& v) {
  if constexpr (ScalarTraits<S>::exact) {
    return sgn(v) > 0 ? v : S(0);
  } else {
    return v > 0 ? v : S(0);
  }
}

template <class S>
S eval_snn(const SNNInstance<S>& inst, const std::vector<S>& x) {
  if (static_cast<int>(x.size()) != inst.W.cols())
    throw DimensionMismatch("eval_snn: input length mismatch");
  std::vector<S> pre = inst.W.apply(x);
  S out = inst.d;
  for (size_t i = 0; i < pre.size(); ++i) out += inst.a[i] * relu<S>(pre[i] + inst.b[i]);
  for (size_t j = 0; j < x.size(); ++j) out += inst.c[j] * x[j];
  return out;
}

// Unique representative of an SNN modulo the signed-permutation redundancy of
// its hidden neurons: unit-norm weight rows, no two augmented rows parallel,
// first nonzero entry of each weight row positive, rows sorted ascending, and
// all merged affine parts collected in (c, d).
struct CanonicalForm {
  int n_star = 0;
  MatD W;
  std::vector<double> b;
  std::vector<double> a;
  std::vector<double> c;
  double d = 0;
};

inline SNNInstance<double> to_double_instance(const SNNInstance<Rat>& q) {
  SNNInstance<double> r;
  r.W = to_double(q.W);
  r.a = to_double(q.a);
  r.b = to_double(q.b);
  r.c = to_double(q.c);
  r.d = q.d.get_d();
  return r;
}
inline const SNNInstance<double>& to_double_instance(const SNNInstance<double>& d) { return d; }

CanonicalForm canonicalize(const SNNInstance<double>& inst, double parallel_eps = 1e-10,
                           double zero_eps = 1e-12);

inline double eval_canonical(const CanonicalForm& cf, const std::vector<double>& x) {
  SNNInstance<double> inst{cf.W, cf.a, cf.b, cf.c, cf.d};
  return eval_snn(inst, x);
}

// Empirical invariance check: max over seeded standard-normal inputs and all
// group elements of |f(gx) - f(x)|. Exact instances are evaluated in exact
// arithmetic (doubles convert to rationals losslessly), so the gap of a
// rational group is reported as exactly 0.
template <class S>
double invariance_report(const FiniteGroup<S>& G, const SNNInstance<S>& inst, int trials,
                         uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double max_gap = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<S> x(G.dim);
    for (int j = 0; j < G.dim; ++j) x[j] = ScalarTraits<S>::from_double(normal(rng));
    S fx = eval_snn(inst, x);
    for (int g = 1; g < G.order(); ++g) {
      S gap = eval_snn(inst, G.elems[g].apply(x)) - fx;
      double d = std::fabs(ScalarTraits<S>::to_double(gap));
      max_gap = std::max(max_gap, d);
    }
  }
  return max_gap;
}

// relu(x) - relu(zx) = H(-z) x for z in {-1, +1}.
bool relu_identity_check(const std::vector<double>& samples);

}  // namespace gsnn
