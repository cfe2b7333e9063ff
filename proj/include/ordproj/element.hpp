#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ordproj/cmat.hpp"
#include "ordproj/linalg.hpp"

namespace ordproj {

/// A finite-dimensional C*-algebra V = M_{d_1} ⊕ ... ⊕ M_{d_k} together with
/// the tolerance policy used by every predicate on its elements. The order
/// unit e is the blockwise identity.
class Model {
 public:
  explicit Model(std::vector<std::size_t> block_dims, TolerancePolicy tol = {});

  const std::vector<std::size_t>& block_dims() const noexcept { return dims_; }
  std::size_t block_count() const noexcept { return dims_.size(); }
  std::size_t dim(std::size_t j) const { return dims_.at(j); }
  const TolerancePolicy& tol() const noexcept { return tol_; }

  /// Models agree when their block structure agrees; tolerances may differ.
  bool same_algebra(const Model& other) const noexcept { return dims_ == other.dims_; }

 private:
  std::vector<std::size_t> dims_;
  TolerancePolicy tol_;
};

/// A value of M_{m,n}(V). Block j stores the (m d_j) x (n d_j) complex matrix
/// whose (a, b) sub-block of size d_j is the j-th component of entry (a, b).
class Element {
 public:
  Element(Model model, std::size_t m, std::size_t n, std::vector<CMat> blocks);

  static Element zero(const Model& model, std::size_t m, std::size_t n);
  /// e^n
  static Element unit(const Model& model, std::size_t n);
  /// Builds each block by calling make(j, block_dim).
  static Element generate(const Model& model, std::size_t m, std::size_t n,
                          const std::function<CMat(std::size_t, std::size_t)>& make);

  const Model& model() const noexcept { return model_; }
  const TolerancePolicy& tol() const noexcept { return model_.tol(); }
  std::size_t rows() const noexcept { return m_; }
  std::size_t cols() const noexcept { return n_; }
  bool is_square() const noexcept { return m_ == n_; }
  const std::vector<CMat>& blocks() const noexcept { return blocks_; }
  const CMat& block(std::size_t j) const { return blocks_.at(j); }

  Element adjoint() const;
  /// Applies f to every block; f must preserve the amplification shape
  /// (rows() x cols() -> new_m x new_n).
  Element map(std::size_t new_m, std::size_t new_n,
              const std::function<CMat(const CMat&, std::size_t)>& f) const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(double s);

 private:
  Model model_;
  std::size_t m_;
  std::size_t n_;
  std::vector<CMat> blocks_;
};

Element operator+(Element lhs, const Element& rhs);
Element operator-(Element lhs, const Element& rhs);
Element operator*(double s, Element v);

/// Model multiplication: blockwise matrix product of u ∈ M_{m,n}(V) and
/// w ∈ M_{n,s}(V).
Element product(const Element& u, const Element& w);

/// Throws ModelMismatch unless both operands live over the same algebra.
void require_same_model(const Element& a, const Element& b, const char* op);
void require_same_shape(const Element& a, const Element& b, const char* op);

/// Blockwise mat_eq with the model's eps_eq.
bool elem_eq(const Element& a, const Element& b);
/// Worst blockwise eq_residual.
double elem_residual(const Element& a, const Element& b);
bool is_zero(const Element& v);

bool is_self_adjoint(const Element& v);
bool is_positive(const Element& v);
/// Worst blockwise psd_defect; requires a self-adjoint element.
double positivity_defect(const Element& v);

/// Blockwise spectral function Q f(Λ) Q* of a self-adjoint element.
Element spectral(const Element& v, const std::function<double(double)>& f);

/// Blockwise psd_sqrt.
Element sqrt_positive(const Element& v);

/// max over blocks of Frobenius norms.
double max_frobenius(const Element& v);

/// Self-adjoint member of M_n(V); the constructor certifies hermiticity
/// within eps_eq and stores the exactly-Hermitian part.
class SelfAdjoint {
 public:
  explicit SelfAdjoint(const Element& v);

  const Element& element() const noexcept { return elem_; }
  operator const Element&() const noexcept { return elem_; }
  const Model& model() const noexcept { return elem_.model(); }
  std::size_t size() const noexcept { return elem_.rows(); }

 private:
  Element elem_;
};

}  // namespace ordproj
