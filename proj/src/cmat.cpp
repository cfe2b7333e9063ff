#include "ordproj/cmat.hpp"

#include <cmath>

#include "ordproj/error.hpp"

namespace ordproj {

namespace {

void require_same_shape(const CMat& a, const CMat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diagonal(std::span<const double> values) {
  CMat m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMat CMat::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  CMat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::ShapeError, "ragged rows");
    std::size_t j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

CMat CMat::adjoint() const {
  CMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double CMat::frobenius() const {
  double acc = 0.0;
  for (const auto& x : data_) acc += std::norm(x);
  return std::sqrt(acc);
}

bool CMat::all_finite() const {
  for (const auto& x : data_)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

CMat CMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::ShapeError, "block out of range");
  CMat out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void CMat::set_block(std::size_t r0, std::size_t c0, const CMat& src) {
  if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
    throw Error(ErrorKind::ShapeError, "set_block out of range");
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) (*this)(r0 + i, c0 + j) = src(i, j);
}

std::vector<cplx> CMat::column(std::size_t j) const {
  std::vector<cplx> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void CMat::set_column(std::size_t j, std::span<const cplx> values) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

CMat& CMat::operator+=(const CMat& rhs) {
  require_same_shape(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

CMat& CMat::operator-=(const CMat& rhs) {
  require_same_shape(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CMat operator+(CMat lhs, const CMat& rhs) { return lhs += rhs; }
CMat operator-(CMat lhs, const CMat& rhs) { return lhs -= rhs; }
CMat operator-(CMat m) { return m *= -1.0; }
CMat operator*(cplx s, CMat m) { return m *= s; }
CMat operator*(CMat m, cplx s) { return m *= s; }

CMat operator*(const CMat& lhs, const CMat& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorKind::ShapeMismatch,
                "product: " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
                    " * " + std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
  }
  CMat out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const cplx a = lhs(i, k);
      if (a == cplx{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

CMat hermitian_part(const CMat& a) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeError, "hermitian_part of non-square matrix");
  CMat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const cplx x = 0.5 * (a(i, j) + std::conj(a(j, i)));
      out(i, j) = x;
      out(j, i) = std::conj(x);
    }
  }
  return out;
}

CMat hstack(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeError, "hstack row mismatch");
  CMat out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

CMat vstack(const CMat& a, const CMat& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::ShapeError, "vstack column mismatch");
  CMat out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

CMat direct_sum(const CMat& a, const CMat& b) {
  CMat out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

CMat kron_identity(const CMat& alpha, std::size_t d) {
  CMat out(alpha.rows() * d, alpha.cols() * d);
  for (std::size_t i = 0; i < alpha.rows(); ++i)
    for (std::size_t j = 0; j < alpha.cols(); ++j)
      for (std::size_t k = 0; k < d; ++k) out(i * d + k, j * d + k) = alpha(i, j);
  return out;
}

CMat suspension(const CMat& v) {
  const std::size_t m = v.rows();
  const std::size_t n = v.cols();
  CMat out(m + n, m + n);
  out.set_block(0, m, v);
  out.set_block(m, 0, v.adjoint());
  return out;
}

}  // namespace ordproj
