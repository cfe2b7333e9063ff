#include "ordproj/finiteness.hpp"

#include <algorithm>

#include "ordproj/absolute_order.hpp"
#include "ordproj/comparison.hpp"
#include "ordproj/error.hpp"
#include "ordproj/matrix_order.hpp"
#include "ordproj/random.hpp"

namespace ordproj {

namespace {

// Projection onto the span of the columns of b, via its left singular vectors.
CMat span_projection(const CMat& b, std::size_t rank, const TolerancePolicy& tol) {
  if (rank == 0) return CMat::zeros(b.rows(), b.rows());
  const CMat l = svd(b, tol).left.block(0, 0, b.rows(), rank);
  return hermitian_part(l * l.adjoint());
}

}  // namespace

CheckReport is_finite_matrix(const Projection& p, std::size_t samples, std::uint64_t seed) {
  const TolerancePolicy& tol = p.element().tol();
  const auto ranks = projection_ranks(p);
  std::vector<CMat> frames;
  for (const auto& b : p.element().blocks()) frames.push_back(eigenspace_above(b, 0.5, tol));

  std::size_t equal_ok = 0, strict_ok = 0, strict_tried = 0;
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, s));
    // random frame inside range(p) of full rank, and one column short of it
    std::vector<CMat> mixed;
    for (std::size_t j = 0; j < frames.size(); ++j) mixed.push_back(frames[j] * gaussian(ranks[j], ranks[j], rng));
    const Element full = Element::generate(p.model(), p.size(), p.size(), [&](std::size_t j, std::size_t) {
      return span_projection(mixed[j], ranks[j], tol);
    });
    const auto q = try_projection(full);
    if (q && leq(*q, p)) {
      bool equiv = true;
      try {
        equivalent(*q, p);
      } catch (const RankError&) {
        equiv = false;
      }
      const double r = elem_residual(*q, p);
      worst = std::max(worst, r);
      if (equiv && r <= tol.eps_eq) ++equal_ok;
    }
    const bool any_rank = std::any_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r > 0; });
    if (!any_rank) continue;
    ++strict_tried;
    const std::size_t cut = rng.index(ranks.size());
    std::size_t j0 = cut;
    while (ranks[j0] == 0) j0 = (j0 + 1) % ranks.size();
    const Element smaller = Element::generate(p.model(), p.size(), p.size(), [&](std::size_t j, std::size_t) {
      const std::size_t k = j == j0 ? ranks[j] - 1 : ranks[j];
      return span_projection(mixed[j].block(0, 0, mixed[j].rows(), k), k, tol);
    });
    const auto q2 = try_projection(smaller);
    if (!q2 || !leq(*q2, p)) continue;
    try {
      equivalent(*q2, p);
    } catch (const RankError&) {
      ++strict_ok;
    }
  }
  CheckReport rep;
  rep.add("equal-rank-equals-p", equal_ok == samples, worst,
          std::to_string(equal_ok) + "/" + std::to_string(samples));
  rep.add("strict-not-equivalent", strict_ok == strict_tried, 0.0,
          std::to_string(strict_ok) + "/" + std::to_string(strict_tried));
  rep.add("finite", equal_ok == samples && strict_ok == strict_tried, worst);
  return rep;
}

CheckReport verify_isometry_unitary(const Element& v) {
  const auto c = classify(v);
  if (!c.has("isometry")) throw Error(ErrorKind::NotIsometry, "|v| differs from e", c.residual("isometry"));
  CheckReport rep;
  rep.add("unitary", c.has("unitary"), c.residual("unitary"));
  // |v*| ~ |v| = e and |v*| <= e; finiteness of e forces |v*| = e
  const Projection range(abs_rect(v.adjoint()));
  const Projection unit(Element::unit(v.model(), v.rows()));
  bool equiv = true;
  try {
    equivalent(range, unit);
  } catch (const RankError&) {
    equiv = false;
  }
  rep.add("range-equivalent-to-unit", equiv && leq(range, unit));
  rep.add("range-equals-unit", elem_eq(range, unit), elem_residual(range, unit));
  return rep;
}

CheckReport check_remark20(const Projection& p1, const Projection& p2, const Projection& q, std::uint64_t seed) {
  if (!leq(p1, q) || !leq(p2, q)) throw Error(ErrorKind::PreconditionViolated, "p1, p2 must lie below q");
  if (!ortho_pos(p1, p2)) throw Error(ErrorKind::PreconditionViolated, "p1 and p2 must be orthogonal");
  const auto sum = try_projection(p1.element() + p2.element());
  if (!sum) throw Error(ErrorKind::CertificationFailed, "p1 + p2 is not a projection");
  const bool qf = is_finite_matrix(q, 50, seed).find("finite")->pass;
  CheckReport rep;
  rep.add("q-finite", qf);
  const auto implies = [&](const std::string& label, const Projection& x, std::uint64_t s) {
    const bool f = is_finite_matrix(x, 50, s).find("finite")->pass;
    rep.add(label, !qf || f);
  };
  implies("(1) p1", p1, derive_seed(seed, 1));
  implies("(1) p2", p2, derive_seed(seed, 2));
  implies("(2) p1+p2", *sum, derive_seed(seed, 3));
  return rep;
}

Element random_square_isometry(const Model& model, std::size_t n, Rng& rng) {
  return Element::generate(model, n, n, [&](std::size_t, std::size_t d) {
    const std::size_t k = rng.index(n * d + 1);
    const CMat frame = k ? random_isometry(n * d, k, rng) : CMat::zeros(n * d, 0);
    return complete_orthonormal(frame);
  });
}

}  // namespace ordproj
