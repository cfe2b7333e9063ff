#include "ordproj/random.hpp"

#include <cmath>
#include <numbers>

#include "ordproj/error.hpp"

namespace ordproj {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) return 0;
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

CMat gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  CMat g(rows, cols);
  for (auto& x : g.data()) x = rng.complex_normal();
  return g;
}

CMat random_hermitian(std::size_t n, Rng& rng) { return hermitian_part(gaussian(n, n, rng)); }

CMat random_unitary(std::size_t n, Rng& rng) { return random_isometry(n, n, rng); }

CMat random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols > rows) throw Error(ErrorKind::ShapeError, "isometry needs cols <= rows");
  CMat q = gaussian(rows, cols, rng);
  for (std::size_t j = 0; j < cols; ++j) {
    // two passes of modified Gram-Schmidt
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cplx d{};
        for (std::size_t i = 0; i < rows; ++i) d += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < rows; ++i) q(i, j) -= d * q(i, k);
      }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < rows; ++i) nrm += std::norm(q(i, j));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < rows; ++i) q(i, j) /= nrm;
  }
  return q;
}

Element random_element(const Model& model, std::size_t m, std::size_t n, Rng& rng) {
  return Element::generate(model, m, n,
                           [&](std::size_t, std::size_t d) { return gaussian(m * d, n * d, rng); });
}

Element random_self_adjoint(const Model& model, std::size_t n, Rng& rng) {
  return Element::generate(model, n, n,
                           [&](std::size_t, std::size_t d) { return random_hermitian(n * d, rng); });
}

Element random_positive(const Model& model, std::size_t n, Rng& rng) {
  return Element::generate(model, n, n, [&](std::size_t, std::size_t d) {
    const std::size_t dim = n * d;
    const std::size_t k = 1 + rng.index(dim);
    const CMat g = gaussian(dim, k, rng);
    return hermitian_part(g * g.adjoint());
  });
}

CMat random_scalar_unitary(std::size_t n, Rng& rng) { return random_unitary(n, rng); }

CMat random_scalar_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  return random_isometry(rows, cols, rng);
}

}  // namespace ordproj
