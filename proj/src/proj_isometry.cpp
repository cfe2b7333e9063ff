#include "ordproj/proj_isometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ordproj/absolute_order.hpp"
#include "ordproj/error.hpp"
#include "ordproj/matrix_order.hpp"
#include "ordproj/random.hpp"

namespace ordproj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Element unit_like(const Element& v) { return Element::unit(v.model(), v.rows()); }

double sa_residual(const Element& v) {
  if (!v.is_square()) return kInf;
  return elem_residual(v, v.adjoint());
}

double scalar_unitary_residual(const CMat& a) {
  if (!a.is_square()) return kInf;
  const CMat id = CMat::identity(a.rows());
  return std::max(eq_residual(a.adjoint() * a, id), eq_residual(a * a.adjoint(), id));
}

double scalar_isometry_residual(const CMat& a) {
  return eq_residual(a.adjoint() * a, CMat::identity(a.cols()));
}

}  // namespace

double projection_residual(const Element& p) {
  const double sa = sa_residual(p);
  if (sa > p.tol().eps_eq) return kInf;
  const SelfAdjoint shifted(2.0 * p - unit_like(p));
  return std::max(sa, elem_residual(abs_sa(shifted), unit_like(p)));
}

Projection::Projection(const Element& p) : elem_(p) {
  residual_ = projection_residual(p);
  if (!(residual_ <= p.tol().eps_eq))
    throw Error(ErrorKind::NotProjection, "|2p - e| differs from e", residual_);
  elem_ = SelfAdjoint(p).element();
}

Projection is_order_projection(const SelfAdjoint& p) {
  const Element& x = p.element();
  const double r = projection_residual(x);
  const bool by_definition = r <= x.tol().eps_eq;
  const Element rest = unit_like(x) - x;
  const bool by_orthogonality = is_positive(x) && is_positive(rest) && ortho_pos(x, rest);
  if (by_definition != by_orthogonality)
    throw Error(ErrorKind::CertificationFailed, "projection characterisations disagree", r);
  if (!by_definition) throw Error(ErrorKind::NotProjection, "not an order projection", r);
  return Projection(x);
}

std::optional<Projection> try_projection(const Element& p) {
  if (!(projection_residual(p) <= p.tol().eps_eq)) return std::nullopt;
  return Projection(p);
}

PartialIsometry::PartialIsometry(const Element& v)
    : elem_(v),
      range_([&] {
        auto r = try_projection(abs_rect(v.adjoint()));
        if (!r) throw Error(ErrorKind::NotPartialIsometry, "|v*| is not an order projection");
        return *r;
      }()),
      support_([&] {
        auto s = try_projection(abs_rect(v));
        if (!s) throw Error(ErrorKind::NotPartialIsometry, "|v| is not an order projection");
        return *s;
      }()) {}

std::optional<PartialIsometry> try_partial_isometry(const Element& v) {
  if (!(projection_residual(abs_rect(v)) <= v.tol().eps_eq)) return std::nullopt;
  if (!(projection_residual(abs_rect(v.adjoint())) <= v.tol().eps_eq)) return std::nullopt;
  return PartialIsometry(v);
}

bool Classification::has(const std::string& name) const {
  return std::any_of(labels.begin(), labels.end(), [&](const Label& l) { return l.name == name; });
}

double Classification::residual(const std::string& name) const {
  for (const auto& l : residuals)
    if (l.name == name) return l.residual;
  return kInf;
}

Classification classify(const Element& v) {
  const double eps = v.tol().eps_eq;
  const Element av = abs_rect(v);
  const Element avs = abs_rect(v.adjoint());
  const double pr_v = projection_residual(av);
  const double pr_vs = projection_residual(avs);
  const double pi = std::max(pr_v, pr_vs);

  Classification c;
  auto decide = [&](const char* name, double r) {
    c.residuals.push_back({name, r});
    if (r <= eps) c.labels.push_back({name, r});
  };

  if (v.is_square()) {
    const Element e = unit_like(v);
    const double sa = sa_residual(v);
    const double normal = elem_residual(av, avs);
    decide("normal", normal);
    decide("unitary", std::max(elem_residual(av, e), elem_residual(avs, e)));
    decide("symmetry", std::max(sa, elem_residual(av, e)));
    decide("order-projection", projection_residual(v));
    decide("partial-unitary", std::max(normal, pr_v));
    decide("partial-symmetry", std::max(sa, pr_v));
  }
  decide("partial-isometry", pi);
  decide("isometry", std::max(pi, elem_residual(av, Element::unit(v.model(), v.cols()))));
  decide("co-isometry", std::max(pi, elem_residual(avs, Element::unit(v.model(), v.rows()))));
  return c;
}

std::pair<Projection, Projection> ps_decompose(const Element& v) {
  const auto c = classify(v);
  if (!c.has("partial-symmetry"))
    throw Error(ErrorKind::NotPartialSymmetry, "not a partial symmetry", c.residual("partial-symmetry"));
  const SelfAdjoint s(v);
  Projection plus(pos_part(s));
  Projection minus(neg_part(s));
  if (!ortho_pos(plus, minus) || !elem_eq(plus.element() - minus.element(), v))
    throw Error(ErrorKind::CertificationFailed, "partial symmetry parts not orthogonal");
  return {plus, minus};
}

PartialIsometry pi_orthogonal_sum(const std::vector<PartialIsometry>& vs) {
  if (vs.empty()) throw Error(ErrorKind::PreconditionViolated, "empty family");
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!ortho_rect(vs[i], vs[j]))
        throw Error(ErrorKind::NotOrthogonal, "members " + std::to_string(i) + " and " + std::to_string(j));
  Element sum = vs.front().element();
  Element abs_sum = abs_rect(vs.front());
  for (std::size_t i = 1; i < vs.size(); ++i) {
    sum += vs[i].element();
    abs_sum += abs_rect(vs[i]);
  }
  auto pi = try_partial_isometry(sum);
  if (!pi) throw Error(ErrorKind::CertificationFailed, "orthogonal sum is not a partial isometry");
  const double r = elem_residual(pi->support(), abs_sum);
  if (r > sum.tol().eps_eq) throw Error(ErrorKind::CertificationFailed, "|sum| differs from sum of |v_i|", r);
  return *pi;
}

Projection proj_direct_sum(const Projection& p, const Projection& q) {
  return Projection(oplus(p, q));
}

std::pair<Projection, Projection> proj_split(const Projection& pq, std::size_t m) {
  const std::size_t total = pq.size();
  if (m == 0 || m >= total) throw Error(ErrorKind::ShapeError, "split point outside element");
  const Element off = sub_element(pq, 0, m, m, total - m);
  if (!is_zero(off)) throw Error(ErrorKind::PreconditionViolated, "projection is not block diagonal");
  return {Projection(sub_element(pq, 0, 0, m, m)), Projection(sub_element(pq, m, m, total - m, total - m))};
}

CheckReport unitary_conj_abs(const CMat& alpha, const Element& v) {
  const double ur = scalar_unitary_residual(alpha);
  if (!(ur <= v.tol().eps_eq)) throw Error(ErrorKind::NotUnitary, "alpha is not unitary", ur);
  const CMat a_star = alpha.adjoint();
  const Element lhs = abs_rect(scalar_act(a_star, v, alpha));
  const Element rhs = scalar_act(a_star, abs_rect(v), alpha);
  const double r = elem_residual(lhs, rhs);
  CheckReport rep;
  rep.add("lemma12", r <= v.tol().eps_eq, r);
  return rep;
}

Projection isometry_conj_proj(const CMat& alpha, const Projection& p) {
  const double ir = scalar_isometry_residual(alpha);
  if (!(ir <= p.element().tol().eps_eq)) throw Error(ErrorKind::NotIsometry, "alpha* alpha != I", ir);
  return Projection(scalar_act(alpha, p, alpha.adjoint()));
}

CheckReport isometry_conj_ortho(const CMat& alpha, const Element& u, const Element& v) {
  const double ir = scalar_isometry_residual(alpha);
  if (!(ir <= u.tol().eps_eq)) throw Error(ErrorKind::NotIsometry, "alpha* alpha != I", ir);
  CheckReport rep;
  const bool pre = ortho_pos(u, v);
  const Element cu = SelfAdjoint(scalar_act(alpha, u, alpha.adjoint())).element();
  const Element cv = SelfAdjoint(scalar_act(alpha, v, alpha.adjoint())).element();
  const double r = ortho_pos_residual(cu, cv);
  rep.add("preserves-orthogonality", !pre || r <= u.tol().eps_eq, pre ? r : 0.0,
          pre ? "orthogonal input" : "non-orthogonal input");
  return rep;
}

Element complete_partial_unitary(const Element& v) {
  const auto c = classify(v);
  if (!c.has("partial-unitary"))
    throw Error(ErrorKind::NotPartialUnitary, "not a partial unitary", c.residual("partial-unitary"));
  const Element u = v + (unit_like(v) - abs_rect(v));
  const auto cu = classify(u);
  if (!cu.has("unitary")) throw Error(ErrorKind::CertificationFailed, "completion is not unitary", cu.residual("unitary"));
  if (!ortho_rect(v, u - v)) throw Error(ErrorKind::CertificationFailed, "completion is not an ortho-complement");
  return u;
}

namespace {

void check_ranks(const Model& model, std::size_t m, std::size_t n, const std::vector<std::size_t>& ranks) {
  if (ranks.size() != model.block_count())
    throw Error(ErrorKind::RankOutOfRange, "one rank per block required");
  for (std::size_t j = 0; j < ranks.size(); ++j)
    if (ranks[j] > std::min(m, n) * model.dim(j))
      throw Error(ErrorKind::RankOutOfRange, "rank " + std::to_string(ranks[j]) + " exceeds block " + std::to_string(j));
}

CMat leading_columns(const CMat& q, std::size_t r) { return q.block(0, 0, q.rows(), r); }

}  // namespace

Projection random_projection(const Model& model, std::size_t n, const std::vector<std::size_t>& ranks,
                             Rng& rng) {
  check_ranks(model, n, n, ranks);
  const Element p = Element::generate(model, n, n, [&](std::size_t j, std::size_t d) {
    const CMat b = leading_columns(random_unitary(n * d, rng), ranks[j]);
    return hermitian_part(b * b.adjoint());
  });
  return Projection(p);
}

Projection random_projection(const Model& model, std::size_t n, const std::vector<std::size_t>& ranks,
                             std::uint64_t seed) {
  Rng rng(seed);
  return random_projection(model, n, ranks, rng);
}

PartialIsometry random_partial_isometry(const Model& model, std::size_t m, std::size_t n,
                                        const std::vector<std::size_t>& ranks, Rng& rng) {
  check_ranks(model, m, n, ranks);
  const Element v = Element::generate(model, m, n, [&](std::size_t j, std::size_t d) {
    const CMat u = leading_columns(random_unitary(m * d, rng), ranks[j]);
    const CMat w = leading_columns(random_unitary(n * d, rng), ranks[j]);
    return u * w.adjoint();
  });
  return PartialIsometry(v);
}

PartialIsometry random_partial_isometry(const Model& model, std::size_t m, std::size_t n,
                                        const std::vector<std::size_t>& ranks, std::uint64_t seed) {
  Rng rng(seed);
  return random_partial_isometry(model, m, n, ranks, rng);
}

std::vector<std::size_t> random_ranks(const Model& model, std::size_t m, std::size_t n, Rng& rng) {
  std::vector<std::size_t> r;
  for (std::size_t d : model.block_dims()) r.push_back(rng.index(std::min(m, n) * d + 1));
  return r;
}

std::vector<std::size_t> projection_ranks(const Element& p) {
  std::vector<std::size_t> r;
  for (const auto& b : p.blocks()) {
    std::size_t k = 0;
    for (double x : herm_eig(b, p.tol()).values) k += x > 0.5 ? 1 : 0;
    r.push_back(k);
  }
  return r;
}

CheckReport check_remark7_2(const Projection& p, const Projection& q) {
  require_same_shape(p, q, "check_remark7_2");
  const Element sum = p.element() + q.element();
  const bool a = leq(sum, unit_like(sum));
  const bool b = ortho_pos(p, q);
  const bool c = projection_residual(sum) <= sum.tol().eps_eq;
  const bool d = is_zero(p) || is_zero(q) || ortho_inf(p, q);
  CheckReport rep;
  rep.add("four-way", a == b && b == c && c == d, 0.0, b ? "orthogonal" : "not orthogonal");
  return rep;
}

CheckReport check_remark7_3(const Element& u, const Element& v) {
  const Element e = unit_like(u);
  const bool pre = is_positive(u) && is_positive(v) && leq(u, e) && leq(v, e) &&
                   projection_residual(u + v) <= u.tol().eps_eq && ortho_pos(u, v);
  const double ru = projection_residual(u), rv = projection_residual(v);
  const bool post = std::max(ru, rv) <= u.tol().eps_eq;
  CheckReport rep;
  rep.add("implication", !pre || post, pre ? std::max(ru, rv) : 0.0, pre ? "premises hold" : "premises fail");
  return rep;
}

CheckReport check_remark8(const Element& v) {
  const double eps = v.tol().eps_eq;
  const bool a = try_partial_isometry(v).has_value();
  const bool b = classify(suspend(v)).has("partial-symmetry");
  const Element diag_susp = oplus(v.adjoint(), v);
  const bool c = try_partial_isometry(diag_susp).has_value();
  CheckReport rep;
  rep.add("equivalence", a == b && b == c, 0.0, a ? "partial isometry" : "not a partial isometry");
  const Element target = oplus(abs_rect(v.adjoint()), abs_rect(v));
  const double r = std::max(elem_residual(abs_rect(suspend(v)), target), elem_residual(abs_rect(diag_susp), target));
  rep.add("suspension-identity", r <= eps, r);
  return rep;
}

CheckReport check_prop9(const Element& v) {
  const double eps = v.tol().eps_eq;
  CheckReport rep;
  if (v.is_square() && sa_residual(v) <= eps) {
    const SelfAdjoint s(v);
    const bool ps = classify(v).has("partial-symmetry");
    const bool parts = projection_residual(pos_part(s)) <= eps && projection_residual(neg_part(s)) <= eps;
    rep.add("self-adjoint", ps == parts, 0.0, ps ? "partial symmetry" : "not a partial symmetry");
  }
  const bool pi = try_partial_isometry(v).has_value();
  const SelfAdjoint w(suspend(v));
  const bool parts = projection_residual(pos_part(w)) <= eps && projection_residual(neg_part(w)) <= eps;
  rep.add("rectangular", pi == parts, 0.0, pi ? "partial isometry" : "not a partial isometry");
  return rep;
}

CheckReport check_cor10(const std::vector<Element>& vs) {
  if (vs.empty()) throw Error(ErrorKind::PreconditionViolated, "empty family");
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!ortho_rect(vs[i], vs[j])) throw Error(ErrorKind::PreconditionViolated, "family is not orthogonal");
  bool all = true;
  Element sum = vs.front();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    all = all && try_partial_isometry(vs[i]).has_value();
    if (i) sum += vs[i];
  }
  const bool total = try_partial_isometry(sum).has_value();
  CheckReport rep;
  rep.add("equivalence", all == total, 0.0, all ? "partial isometries" : "not all partial isometries");
  if (all && total) {
    Element abs_sum = abs_rect(vs.front());
    for (std::size_t i = 1; i < vs.size(); ++i) abs_sum += abs_rect(vs[i]);
    const double r = elem_residual(abs_rect(sum), abs_sum);
    rep.add("abs-additive", r <= sum.tol().eps_eq, r);
  }
  return rep;
}

CheckReport check_prop11(const Element& p, const Element& q) {
  const double eps = p.tol().eps_eq;
  const bool both = projection_residual(p) <= eps && projection_residual(q) <= eps;
  const double r = projection_residual(oplus(p, q));
  CheckReport rep;
  rep.add("equivalence", both == (r <= eps), both ? r : 0.0, both ? "projections" : "not both projections");
  return rep;
}

}  // namespace ordproj
