#include "ordproj/element.hpp"

#include <algorithm>
#include <string>

#include "ordproj/error.hpp"

namespace ordproj {

Model::Model(std::vector<std::size_t> block_dims, TolerancePolicy tol)
    : dims_(std::move(block_dims)), tol_(tol) {
  if (dims_.empty()) throw Error(ErrorKind::ShapeError, "model needs at least one block");
  for (std::size_t d : dims_)
    if (d == 0) throw Error(ErrorKind::ShapeError, "block dimensions must be positive");
  tol_.validate();
}

Element::Element(Model model, std::size_t m, std::size_t n, std::vector<CMat> blocks)
    : model_(std::move(model)), m_(m), n_(n), blocks_(std::move(blocks)) {
  if (m_ == 0 || n_ == 0) throw Error(ErrorKind::ShapeError, "element shape must be positive");
  if (blocks_.size() != model_.block_count())
    throw Error(ErrorKind::ShapeError, "block count does not match model");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const std::size_t d = model_.dim(j);
    if (blocks_[j].rows() != m_ * d || blocks_[j].cols() != n_ * d) {
      throw Error(ErrorKind::ShapeError, "block " + std::to_string(j) + " has shape " +
                                             std::to_string(blocks_[j].rows()) + "x" +
                                             std::to_string(blocks_[j].cols()));
    }
  }
}

Element Element::zero(const Model& model, std::size_t m, std::size_t n) {
  return generate(model, m, n, [&](std::size_t, std::size_t d) { return CMat(m * d, n * d); });
}

Element Element::unit(const Model& model, std::size_t n) {
  return generate(model, n, n, [&](std::size_t, std::size_t d) { return CMat::identity(n * d); });
}

Element Element::generate(const Model& model, std::size_t m, std::size_t n,
                          const std::function<CMat(std::size_t, std::size_t)>& make) {
  std::vector<CMat> blocks;
  blocks.reserve(model.block_count());
  for (std::size_t j = 0; j < model.block_count(); ++j) blocks.push_back(make(j, model.dim(j)));
  return Element(model, m, n, std::move(blocks));
}

Element Element::adjoint() const {
  std::vector<CMat> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) blocks.push_back(b.adjoint());
  return Element(model_, n_, m_, std::move(blocks));
}

Element Element::map(std::size_t new_m, std::size_t new_n,
                     const std::function<CMat(const CMat&, std::size_t)>& f) const {
  std::vector<CMat> blocks;
  blocks.reserve(blocks_.size());
  for (std::size_t j = 0; j < blocks_.size(); ++j) blocks.push_back(f(blocks_[j], model_.dim(j)));
  return Element(model_, new_m, new_n, std::move(blocks));
}

Element& Element::operator+=(const Element& rhs) {
  require_same_shape(*this, rhs, "operator+");
  for (std::size_t j = 0; j < blocks_.size(); ++j) blocks_[j] += rhs.blocks_[j];
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_shape(*this, rhs, "operator-");
  for (std::size_t j = 0; j < blocks_.size(); ++j) blocks_[j] -= rhs.blocks_[j];
  return *this;
}

Element& Element::operator*=(double s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
Element operator*(double s, Element v) { return v *= s; }

void require_same_model(const Element& a, const Element& b, const char* op) {
  if (!a.model().same_algebra(b.model()))
    throw Error(ErrorKind::ModelMismatch, std::string(op) + ": operands from different models");
}

void require_same_shape(const Element& a, const Element& b, const char* op) {
  require_same_model(a, b, op);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeError,
                std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

Element product(const Element& u, const Element& w) {
  require_same_model(u, w, "product");
  if (u.cols() != w.rows()) throw Error(ErrorKind::ShapeError, "product: inner shapes differ");
  std::vector<CMat> blocks;
  for (std::size_t j = 0; j < u.blocks().size(); ++j) blocks.push_back(u.block(j) * w.block(j));
  return Element(u.model(), u.rows(), w.cols(), std::move(blocks));
}

double elem_residual(const Element& a, const Element& b) {
  require_same_shape(a, b, "elem_eq");
  double worst = 0.0;
  for (std::size_t j = 0; j < a.blocks().size(); ++j)
    worst = std::max(worst, eq_residual(a.block(j), b.block(j)));
  return worst;
}

bool elem_eq(const Element& a, const Element& b) {
  return elem_residual(a, b) <= a.tol().eps_eq;
}

bool is_zero(const Element& v) {
  return elem_eq(v, Element::zero(v.model(), v.rows(), v.cols()));
}

bool is_self_adjoint(const Element& v) {
  if (!v.is_square()) return false;
  for (const auto& b : v.blocks())
    if (!is_hermitian(b, v.tol())) return false;
  return true;
}

double positivity_defect(const Element& v) {
  double worst = 0.0;
  for (const auto& b : v.blocks()) worst = std::max(worst, psd_defect(b, v.tol()));
  return worst;
}

bool is_positive(const Element& v) {
  if (!is_self_adjoint(v)) return false;
  return positivity_defect(v) <= v.tol().eps_psd;
}

Element spectral(const Element& v, const std::function<double(double)>& f) {
  if (!v.is_square()) throw Error(ErrorKind::NotSelfAdjoint, "spectral function of non-square element");
  return v.map(v.rows(), v.cols(),
               [&](const CMat& b, std::size_t) { return spectral_apply(b, f, v.tol()); });
}

Element sqrt_positive(const Element& v) {
  return v.map(v.rows(), v.cols(), [&](const CMat& b, std::size_t) { return psd_sqrt(b, v.tol()); });
}

double max_frobenius(const Element& v) {
  double worst = 0.0;
  for (const auto& b : v.blocks()) worst = std::max(worst, b.frobenius());
  return worst;
}

SelfAdjoint::SelfAdjoint(const Element& v) : elem_(v) {
  if (!v.is_square()) throw Error(ErrorKind::NotSelfAdjoint, "element is not square");
  double worst = 0.0;
  for (const auto& b : v.blocks()) worst = std::max(worst, eq_residual(b, b.adjoint()));
  if (worst > v.tol().eps_eq)
    throw Error(ErrorKind::NotSelfAdjoint, "||v - v*|| too large", worst);
  elem_ = v.map(v.rows(), v.cols(), [](const CMat& b, std::size_t) { return hermitian_part(b); });
}

}  // namespace ordproj
