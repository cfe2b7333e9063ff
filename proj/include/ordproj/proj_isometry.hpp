#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordproj/element.hpp"
#include "ordproj/report.hpp"

namespace ordproj {

class Rng;

/// |2p - e^n| vs e^n as an eq_residual; +inf when p is not self-adjoint.
double projection_residual(const Element& p);

/// Certified order projection.
class Projection {
 public:
  /// Certifies p; throws NotProjection carrying the residual.
  explicit Projection(const Element& p);

  const Element& element() const noexcept { return elem_; }
  operator const Element&() const noexcept { return elem_; }
  const Model& model() const noexcept { return elem_.model(); }
  std::size_t size() const noexcept { return elem_.rows(); }
  double residual() const noexcept { return residual_; }

 private:
  Element elem_;
  double residual_ = 0.0;
};

/// Decides p ∈ OP_n(V) by the |2p - e| = e identity and cross-checks it
/// against p ⊥ (e - p). Throws NotProjection, or CertificationFailed if the
/// two characterisations disagree.
Projection is_order_projection(const SelfAdjoint& p);
std::optional<Projection> try_projection(const Element& p);

/// Certified partial isometry with its range |v*| and support |v|.
class PartialIsometry {
 public:
  /// Throws NotPartialIsometry.
  explicit PartialIsometry(const Element& v);

  const Element& element() const noexcept { return elem_; }
  operator const Element&() const noexcept { return elem_; }
  const Projection& range() const noexcept { return range_; }
  const Projection& support() const noexcept { return support_; }
  double residual() const noexcept { return std::max(range_.residual(), support_.residual()); }

 private:
  Element elem_;
  Projection range_;
  Projection support_;
};

std::optional<PartialIsometry> try_partial_isometry(const Element& v);

struct Label {
  std::string name;
  double residual = 0.0;
};

/// Every applicable class among normal, unitary, symmetry, order-projection,
/// partial-unitary, partial-symmetry, partial-isometry, isometry and
/// co-isometry, each with the residual it was decided at. The first six are
/// only considered for square elements.
struct Classification {
  std::vector<Label> labels;
  /// Residual of every candidate class, including rejected ones.
  std::vector<Label> residuals;

  bool has(const std::string& name) const;
  double residual(const std::string& name) const;
};
Classification classify(const Element& v);

/// (v+, v-) of a partial symmetry, both certified. Throws NotPartialSymmetry.
std::pair<Projection, Projection> ps_decompose(const Element& v);

/// Sum of mutually orthogonal partial isometries. Throws NotOrthogonal or
/// CertificationFailed.
PartialIsometry pi_orthogonal_sum(const std::vector<PartialIsometry>& vs);

/// p ⊕ q. Throws ModelMismatch.
Projection proj_direct_sum(const Projection& p, const Projection& q);
/// Inverse of proj_direct_sum at split point m. Throws PreconditionViolated
/// when the off-diagonal corners are nonzero, NotProjection if a corner fails.
std::pair<Projection, Projection> proj_split(const Projection& pq, std::size_t m);

/// |α* v α| = α* |v| α for scalar unitary α. Throws NotUnitary.
CheckReport unitary_conj_abs(const CMat& alpha, const Element& v);

/// α p α* for α*α = I. Throws NotIsometry.
Projection isometry_conj_proj(const CMat& alpha, const Projection& p);
/// u ⊥ v implies α u α* ⊥ α v α*, for α*α = I. Throws NotIsometry.
CheckReport isometry_conj_ortho(const CMat& alpha, const Element& u, const Element& v);

/// u = v + (e - |v|) for a partial unitary v. Throws NotPartialUnitary or
/// CertificationFailed.
Element complete_partial_unitary(const Element& v);

/// Q diag(1^{r_j}, 0, ...) Q* per block with Q Haar unitary. Throws
/// RankOutOfRange.
Projection random_projection(const Model& model, std::size_t n, const std::vector<std::size_t>& ranks,
                             Rng& rng);
Projection random_projection(const Model& model, std::size_t n, const std::vector<std::size_t>& ranks,
                             std::uint64_t seed);
/// U_r W_r* per block with U, W Haar unitaries truncated to r_j columns.
PartialIsometry random_partial_isometry(const Model& model, std::size_t m, std::size_t n,
                                        const std::vector<std::size_t>& ranks, Rng& rng);
PartialIsometry random_partial_isometry(const Model& model, std::size_t m, std::size_t n,
                                        const std::vector<std::size_t>& ranks, std::uint64_t seed);

/// Uniformly random admissible rank vector for n x n (or m x n) elements.
std::vector<std::size_t> random_ranks(const Model& model, std::size_t m, std::size_t n, Rng& rng);

/// Blockwise ranks of a projection (eigenvalues above 1/2).
std::vector<std::size_t> projection_ranks(const Element& p);

/// Four-way equivalence for projections p, q: p + q <= e, p ⊥ q, p + q a
/// projection, p ⊥∞ q.
CheckReport check_remark7_2(const Projection& p, const Projection& q);
/// 0 <= u, v <= e, u + v a projection and u ⊥ v imply u, v projections.
CheckReport check_remark7_3(const Element& u, const Element& v);
/// v partial isometry <=> off-diagonal suspension partial symmetry <=>
/// diagonal suspension partial isometry.
CheckReport check_remark8(const Element& v);
/// Self-adjoint v: partial symmetry <=> v± projections; any v: partial
/// isometry <=> suspension± projections.
CheckReport check_prop9(const Element& v);
/// Mutually orthogonal family: all partial isometries <=> sum is one.
CheckReport check_cor10(const std::vector<Element>& vs);
/// p ⊕ q projection <=> p and q projections.
CheckReport check_prop11(const Element& p, const Element& q);

}  // namespace ordproj
