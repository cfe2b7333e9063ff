#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ordproj {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMat zeros(std::size_t rows, std::size_t cols) { return CMat(rows, cols); }
  static CMat identity(std::size_t n);
  static CMat diagonal(std::span<const double> values);
  static CMat from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  CMat adjoint() const;
  double frobenius() const;
  bool all_finite() const;

  CMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CMat& src);

  std::vector<cplx> column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const cplx> values);

  CMat& operator+=(const CMat& rhs);
  CMat& operator-=(const CMat& rhs);
  CMat& operator*=(cplx s);

  friend bool operator==(const CMat&, const CMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMat operator+(CMat lhs, const CMat& rhs);
CMat operator-(CMat lhs, const CMat& rhs);
CMat operator-(CMat m);
CMat operator*(const CMat& lhs, const CMat& rhs);
CMat operator*(cplx s, CMat m);
CMat operator*(CMat m, cplx s);

/// (a + a*) / 2; makes rounding-level asymmetry exact.
CMat hermitian_part(const CMat& a);

CMat hstack(const CMat& a, const CMat& b);
CMat vstack(const CMat& a, const CMat& b);
CMat direct_sum(const CMat& a, const CMat& b);

/// alpha ⊗ I_d, the amplification of a scalar matrix to a block of dimension d.
CMat kron_identity(const CMat& alpha, std::size_t d);

/// [[0, v], [v*, 0]].
CMat suspension(const CMat& v);

}  // namespace ordproj
