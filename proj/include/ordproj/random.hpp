#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ordproj/cmat.hpp"
#include "ordproj/element.hpp"

namespace ordproj {

/// splitmix64 mix of (master, index); gives every suite case an independent
/// stream so serial and parallel runs agree.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Seeded generator. Normal variates use Box-Muller over 53-bit uniforms so
/// streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  cplx complex_normal();
  std::size_t index(std::size_t n);  // uniform in [0, n)
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

CMat gaussian(std::size_t rows, std::size_t cols, Rng& rng);
CMat random_hermitian(std::size_t n, Rng& rng);
/// Haar-distributed unitary via Gram-Schmidt QR of a Gaussian matrix.
CMat random_unitary(std::size_t n, Rng& rng);
/// rows x cols matrix with orthonormal columns (cols <= rows).
CMat random_isometry(std::size_t rows, std::size_t cols, Rng& rng);

Element random_element(const Model& model, std::size_t m, std::size_t n, Rng& rng);
Element random_self_adjoint(const Model& model, std::size_t n, Rng& rng);
/// G G* with a random number of columns, so rank-deficient positives appear.
Element random_positive(const Model& model, std::size_t n, Rng& rng);

/// Scalar (model-free) unitary / isometry matrices acting by amplification.
CMat random_scalar_unitary(std::size_t n, Rng& rng);
CMat random_scalar_isometry(std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace ordproj
