#pragma once

#include <vector>

#include "ordproj/element.hpp"
#include "ordproj/random.hpp"

namespace testing_helpers {

using namespace ordproj;

/// Element of M_1(M_d) holding the d x d matrix `a`.
inline Element scalar_elem(const CMat& a) {
  return Element(Model({a.rows()}), 1, 1, {a});
}

/// Element of M_{m,n}(ℂ) holding the m x n matrix `a`.
inline Element complex_elem(const CMat& a) {
  return Element(Model({1}), a.rows(), a.cols(), {a});
}

inline CMat diag(std::initializer_list<double> xs) {
  std::vector<double> v(xs);
  return CMat::diagonal(v);
}

inline CMat e12() { return CMat::from_rows({{0, 1}, {0, 0}}); }
inline CMat e21() { return CMat::from_rows({{0, 0}, {1, 0}}); }

inline const std::vector<std::vector<std::size_t>>& block_sets() {
  static const std::vector<std::vector<std::size_t>> sets = {{2}, {3}, {1, 2}};
  return sets;
}

/// Per-block random unitary frame shared by two positives with disjoint
/// eigen-supports.
inline std::pair<Element, Element> disjoint_positive_pair(const Model& model, std::size_t n, Rng& rng) {
  std::vector<CMat> a, b;
  for (std::size_t j = 0; j < model.block_count(); ++j) {
    const std::size_t dim = n * model.dim(j);
    const CMat q = random_unitary(dim, rng);
    std::vector<double> x(dim, 0.0), y(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      const double mag = rng.uniform(0.2, 2.0);
      if (i % 2 == 0) x[i] = mag; else y[i] = mag;
    }
    a.push_back(hermitian_part(q * CMat::diagonal(x) * q.adjoint()));
    b.push_back(hermitian_part(q * CMat::diagonal(y) * q.adjoint()));
  }
  return {Element(model, n, n, std::move(a)), Element(model, n, n, std::move(b))};
}

}  // namespace testing_helpers
