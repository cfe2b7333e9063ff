#include "ordproj/matrix_order.hpp"

#include <algorithm>
#include <cmath>

#include "ordproj/absolute_order.hpp"
#include "ordproj/error.hpp"

namespace ordproj {

namespace {

CMat abs_block(const CMat& b, const TolerancePolicy& tol) {
  const Svd s = svd(b, tol);
  const std::size_t n = b.cols();
  CMat scaled = s.right;
  for (std::size_t k = 0; k < n; ++k) {
    const double sigma = k < s.singulars.size() ? s.singulars[k] : 0.0;
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= sigma;
  }
  return hermitian_part(scaled * s.right.adjoint());
}

std::vector<CMat> combine(const Element& v, const Element& w, CMat (*f)(const CMat&, const CMat&)) {
  std::vector<CMat> out;
  for (std::size_t j = 0; j < v.blocks().size(); ++j) out.push_back(f(v.block(j), w.block(j)));
  return out;
}

// True iff [[k I, b], [b*, k I]] + tau I admits a Cholesky factor.
bool norm_feasible(const CMat& b, double k, double tau) {
  const std::size_t m = b.rows(), n = b.cols();
  CMat big(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i) big(i, i) = k;
  for (std::size_t i = 0; i < n; ++i) big(m + i, m + i) = k;
  big.set_block(0, m, b);
  big.set_block(m, 0, b.adjoint());
  return cholesky_succeeds(big, tau);
}

}  // namespace

Element abs_rect(const Element& v) {
  return v.map(v.cols(), v.cols(), [&](const CMat& b, std::size_t) { return abs_block(b, v.tol()); });
}

Element oplus(const Element& v, const Element& w) {
  require_same_model(v, w, "oplus");
  return Element(v.model(), v.rows() + w.rows(), v.cols() + w.cols(), combine(v, w, direct_sum));
}

Element stack_rows(const Element& v, const Element& w) {
  require_same_model(v, w, "stack_rows");
  if (v.cols() != w.cols()) throw Error(ErrorKind::ShapeError, "stack_rows: column counts differ");
  return Element(v.model(), v.rows() + w.rows(), v.cols(), combine(v, w, vstack));
}

Element stack_cols(const Element& v, const Element& w) {
  require_same_model(v, w, "stack_cols");
  if (v.rows() != w.rows()) throw Error(ErrorKind::ShapeError, "stack_cols: row counts differ");
  return Element(v.model(), v.rows(), v.cols() + w.cols(), combine(v, w, hstack));
}

Element suspend(const Element& v) {
  const std::size_t s = v.rows() + v.cols();
  return v.map(s, s, [](const CMat& b, std::size_t) { return suspension(b); });
}

Element corner_embed(const Element& v, std::size_t row, std::size_t col, std::size_t total_m,
                     std::size_t total_n) {
  if (row + v.rows() > total_m || col + v.cols() > total_n)
    throw Error(ErrorKind::ShapeError, "corner_embed: element does not fit");
  return v.map(total_m, total_n, [&](const CMat& b, std::size_t d) {
    CMat out(total_m * d, total_n * d);
    out.set_block(row * d, col * d, b);
    return out;
  });
}

Element sub_element(const Element& v, std::size_t row, std::size_t col, std::size_t nr,
                    std::size_t nc) {
  if (row + nr > v.rows() || col + nc > v.cols() || nr == 0 || nc == 0)
    throw Error(ErrorKind::ShapeError, "sub_element: range outside element");
  return v.map(nr, nc, [&](const CMat& b, std::size_t d) { return b.block(row * d, col * d, nr * d, nc * d); });
}

Element scalar_left(const CMat& alpha, const Element& v) {
  if (alpha.cols() != v.rows()) throw Error(ErrorKind::ShapeError, "scalar_act: alpha does not conform");
  return v.map(alpha.rows(), v.cols(), [&](const CMat& b, std::size_t d) { return kron_identity(alpha, d) * b; });
}

Element scalar_right(const Element& v, const CMat& beta) {
  if (beta.rows() != v.cols()) throw Error(ErrorKind::ShapeError, "scalar_act: beta does not conform");
  return v.map(v.rows(), beta.cols(), [&](const CMat& b, std::size_t d) { return b * kron_identity(beta, d); });
}

Element scalar_act(const CMat& alpha, const Element& v, const CMat& beta) {
  return scalar_right(scalar_left(alpha, v), beta);
}

double scalar_act_defect(const CMat& alpha, const Element& v, const CMat& beta) {
  const Element lhs = abs_rect(scalar_act(alpha, v, beta));
  const Element rhs = op_norm(alpha, v.tol()) * abs_rect(scalar_right(abs_rect(v), beta));
  return positivity_defect(SelfAdjoint(rhs - lhs));
}

bool ortho_rect(const Element& u, const Element& v) {
  require_same_shape(u, v, "ortho_rect");
  return ortho_general_sa(SelfAdjoint(suspend(u)), SelfAdjoint(suspend(v)));
}

double spectral_norm(const Element& v) {
  double worst = 0.0;
  for (const auto& b : v.blocks()) worst = std::max(worst, op_norm(b, v.tol()));
  return worst;
}

double order_unit_norm(const Element& v) {
  const double fro = max_frobenius(v);
  if (fro == 0.0) return 0.0;
  const double eps = v.tol().eps_offdiag;
  auto feasible = [&](double k) {
    for (const auto& b : v.blocks()) {
      const double tau = eps * std::max(1.0, k + b.frobenius());
      if (!norm_feasible(b, k, tau)) return false;
    }
    return true;
  };
  // The Frobenius norm bounds the largest singular value, so `hi` is feasible.
  const double upper = fro + 1.0;
  double lo = 0.0, hi = upper;
  const double width = 1e-10 * std::max(1.0, upper);
  for (int it = 0; hi - lo > width; ++it) {
    if (it > 200) throw Error(ErrorKind::NoConvergence, "order_unit_norm bisection stalled");
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

CheckReport check_prop5(const Element& u, const Element& v) {
  require_same_shape(u, v, "check_prop5");
  const double eps = u.tol().eps_eq;
  CheckReport r;
  const Element au = abs_rect(u), av = abs_rect(v);
  const Element as = abs_rect(u.adjoint()), bs = abs_rect(v.adjoint());
  double c1 = 0.0;
  for (double s : {1.0, -1.0}) {
    c1 = std::max(c1, elem_residual(abs_rect(u + s * v), au + av));
    c1 = std::max(c1, elem_residual(abs_rect(u.adjoint() + s * v.adjoint()), as + bs));
  }
  const bool orth = ortho_rect(u, v);
  const bool characterised = c1 <= eps;
  r.add("characterisation", characterised, characterised ? c1 : 0.0);
  r.add("agrees-with-ortho", characterised == orth, 0.0);
  if (orth) {
    const double s1 = elem_residual(abs_rect(stack_rows(u, v)), au + av);
    const double s2 = elem_residual(abs_rect(stack_cols(u, v)), oplus(au, av));
    r.add("stack-rows", s1 <= eps, s1);
    r.add("stack-cols", s2 <= eps, s2);
  }
  return r;
}

CheckReport check_zero_prop(const Element& v) {
  CheckReport r;
  const bool z = is_zero(v);
  const bool za = is_zero(abs_rect(v));
  const bool zs = is_zero(abs_rect(v.adjoint()));
  r.add("v=0", z);
  r.add("|v|=0", za);
  r.add("|v*|=0", zs);
  r.add("equivalent", z == za && za == zs);
  return r;
}

CheckReport check_norm_prop(const Element& v) {
  CheckReport r;
  const double nv = order_unit_norm(v);
  const double na = order_unit_norm(abs_rect(v));
  const double ns = order_unit_norm(abs_rect(v.adjoint()));
  const double gap = std::max({std::abs(nv - na), std::abs(nv - ns), std::abs(na - ns)});
  r.add("norms-agree", gap <= 1e-8, gap);
  return r;
}

CheckReport check_remark3(const Element& v, const CMat& isometry) {
  const double eps = v.tol().eps_eq;
  CheckReport r;
  const Element av = abs_rect(v);
  const Element avs = abs_rect(v.adjoint());

  const double r1 = elem_residual(abs_rect(scalar_left(isometry, v)), av);
  r.add("r3.1", r1 <= eps, r1);

  const double r2 = elem_residual(abs_rect(suspend(v)), oplus(avs, av));
  r.add("r3.2", r2 <= eps, r2);

  const Element block = stack_rows(stack_cols(avs, v), stack_cols(v.adjoint(), av));
  const double r3 = positivity_defect(SelfAdjoint(block));
  r.add("r3.3", r3 <= v.tol().eps_psd, r3);

  const Element pad_r = stack_rows(v, Element::zero(v.model(), v.rows() + 1, v.cols()));
  const double r4 = elem_residual(abs_rect(pad_r), av);
  r.add("r3.4", r4 <= eps, r4);

  const std::size_t s = 2;
  const Element pad_c = stack_cols(v, Element::zero(v.model(), v.rows(), s));
  const double r5 = elem_residual(abs_rect(pad_c), oplus(av, Element::zero(v.model(), s, s)));
  r.add("r3.5", r5 <= eps, r5);
  return r;
}

CheckReport check_remark4_sum(const Element& u1, const Element& v1, const Element& u2,
                              const Element& v2) {
  CheckReport r;
  const bool lhs = ortho_pos(oplus(u1, v1), oplus(u2, v2));
  const bool rhs = ortho_pos(u1, u2) && ortho_pos(v1, v2);
  r.add("r4.1", lhs == rhs, 0.0, lhs ? "orthogonal" : "not orthogonal");
  return r;
}

CheckReport check_remark4_rect(const Element& u, const Element& v) {
  CheckReport r;
  const bool lhs = ortho_rect(u, v);
  const bool rhs = ortho_pos(abs_rect(u), abs_rect(v)) &&
                   ortho_pos(abs_rect(u.adjoint()), abs_rect(v.adjoint()));
  r.add("r4.2", lhs == rhs, 0.0, lhs ? "orthogonal" : "not orthogonal");
  return r;
}

}  // namespace ordproj
