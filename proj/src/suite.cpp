#include "ordproj/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "ordproj/absolute_order.hpp"
#include "ordproj/cardinal.hpp"
#include "ordproj/comparison.hpp"
#include "ordproj/error.hpp"
#include "ordproj/finiteness.hpp"
#include "ordproj/matrix_order.hpp"
#include "ordproj/proj_isometry.hpp"
#include "ordproj/random.hpp"

namespace ordproj {

namespace {

struct Ctx {
  const Model& model;
  std::size_t n;
  Rng& rng;
  const SuiteOptions& opt;
  std::uint64_t seed;

  std::size_t size() { return opt.dims[rng.index(opt.dims.size())]; }
};

CMat leading(const CMat& q, std::size_t k) { return q.block(0, 0, q.rows(), k); }
CMat gram(const CMat& b) { return hermitian_part(b * b.adjoint()); }

// Mutually orthogonal positives in one random frame per block. The first
// indices go to members in turn so each member is nonzero where room allows;
// the rest go to a random member or, with `spare`, to nobody.
std::vector<Element> square_family(const Model& model, std::size_t n, std::size_t count, Rng& rng, bool spare,
                                   bool unit_magnitudes) {
  std::vector<std::vector<CMat>> blocks(count);
  for (std::size_t j = 0; j < model.block_count(); ++j) {
    const std::size_t dim = n * model.dim(j);
    const CMat q = random_unitary(dim, rng);
    std::vector<std::vector<double>> diag(count, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t owner = i < count ? i : rng.index(count + (spare ? 1 : 0));
      if (owner < count) diag[owner][i] = unit_magnitudes ? 1.0 : rng.uniform(0.2, 2.0);
    }
    for (std::size_t k = 0; k < count; ++k)
      blocks[k].push_back(hermitian_part(q * CMat::diagonal(diag[k]) * q.adjoint()));
  }
  std::vector<Element> out;
  for (auto& b : blocks) out.emplace_back(model, n, n, std::move(b));
  return out;
}

// Positives in one frame whose eigen-supports overlap on random indices.
std::pair<Element, Element> overlapping_pair(const Model& model, std::size_t n, Rng& rng) {
  std::vector<CMat> a, b;
  for (std::size_t j = 0; j < model.block_count(); ++j) {
    const std::size_t dim = n * model.dim(j);
    const CMat q = random_unitary(dim, rng);
    std::vector<double> x(dim, 0.0), y(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t kind = i == 0 ? 2 : rng.index(3);
      if (kind != 1) x[i] = rng.uniform(0.2, 2.0);
      if (kind != 0) y[i] = rng.uniform(0.2, 2.0);
    }
    a.push_back(hermitian_part(q * CMat::diagonal(x) * q.adjoint()));
    b.push_back(hermitian_part(q * CMat::diagonal(y) * q.adjoint()));
  }
  return {Element(model, n, n, std::move(a)), Element(model, n, n, std::move(b))};
}

// Mutually orthogonal m x n elements sharing singular frames.
std::vector<Element> rect_family(const Model& model, std::size_t m, std::size_t n, std::size_t count, Rng& rng,
                                 bool unit_magnitudes) {
  std::vector<std::vector<CMat>> blocks(count);
  for (std::size_t j = 0; j < model.block_count(); ++j) {
    const std::size_t d = model.dim(j);
    const CMat l = random_unitary(m * d, rng);
    const CMat r = random_unitary(n * d, rng);
    std::vector<CMat> acc(count, CMat::zeros(m * d, n * d));
    for (std::size_t i = 0; i < std::min(m, n) * d; ++i) {
      const std::size_t owner = i < count ? i : rng.index(count + 1);
      if (owner == count) continue;
      const double s = unit_magnitudes ? 1.0 : rng.uniform(0.2, 2.0);
      acc[owner] += s * (l.block(0, i, m * d, 1) * r.block(0, i, n * d, 1).adjoint());
    }
    for (std::size_t k = 0; k < count; ++k) blocks[k].push_back(std::move(acc[k]));
  }
  std::vector<Element> out;
  for (auto& b : blocks) out.emplace_back(model, m, n, std::move(b));
  return out;
}

Projection ranked_projection(Ctx& c, std::size_t n, const std::vector<std::size_t>& ranks) {
  return random_projection(c.model, n, ranks, c.rng);
}

// Ranks capped at `cap` per block so that equal rank vectors are common.
std::vector<std::size_t> small_ranks(Ctx& c, std::size_t n, std::size_t cap) {
  std::vector<std::size_t> r;
  for (std::size_t d : c.model.block_dims()) r.push_back(c.rng.index(std::min(cap, n * d) + 1));
  return r;
}

// Ranks fitting in size n, drawn equal to `like` with probability 1/2.
std::vector<std::size_t> maybe_equal_ranks(Ctx& c, std::size_t n, const std::vector<std::size_t>& like) {
  bool fits = true;
  for (std::size_t j = 0; j < like.size(); ++j) fits = fits && like[j] <= n * c.model.dim(j);
  if (fits && c.rng.coin()) return like;
  return random_ranks(c.model, n, n, c.rng);
}

bool raises_rank_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const RankError&) {
    return true;
  }
  return false;
}

CheckReport keep(const CheckReport& all, std::initializer_list<const char*> labels) {
  CheckReport rep;
  for (const auto& cl : all.clauses)
    if (std::find(labels.begin(), labels.end(), cl.label) != labels.end()) rep.clauses.push_back(cl);
  return rep;
}

CheckReport from_axioms(const AxiomReport& a) {
  CheckReport rep;
  for (const auto& t : a.axioms) rep.add(t.axiom, t.failed == 0, t.worst);
  return rep;
}

using CaseFn = std::function<CheckReport(Ctx&)>;

CheckReport case_axioms(Ctx& c) {
  const auto sa = [&] { return SelfAdjoint(random_self_adjoint(c.model, c.n, c.rng)); };
  SelfAdjoint third = sa();
  if (c.rng.coin()) {
    const auto fam = square_family(c.model, c.n, 2, c.rng, true, false);
    third = SelfAdjoint(fam[0] - fam[1]);
  }
  const std::vector<SaTriple> triples{{sa(), sa(), third}};
  return from_axioms(check_abs_axioms(c.model, triples, c.rng.next()));
}

CheckReport case_ortho(Ctx& c) {
  Element u = Element::zero(c.model, c.n, c.n), v = u;
  const std::size_t kind = c.rng.index(3);
  if (kind == 0) {
    const auto fam = square_family(c.model, c.n, 2, c.rng, true, false);
    u = fam[0];
    v = fam[1];
  } else if (kind == 1) {
    u = random_positive(c.model, c.n, c.rng);
    v = random_positive(c.model, c.n, c.rng);
  } else {
    std::tie(u, v) = overlapping_pair(c.model, c.n, c.rng);
  }
  CheckReport rep;
  const bool pos = ortho_pos(u, v);
  const bool alg = ortho_alg(u, v);
  std::string note = pos ? "orthogonal" : "not orthogonal";
  bool agree = pos == alg;
  const double res = pos ? ortho_alg_residual(u, v) : 0.0;
  if (!is_zero(u) && !is_zero(v)) {
    const bool inf = ortho_inf_hereditary(u, v);
    agree = agree && inf == pos;
    note += ortho_inf(u, v) == pos ? "; plain norm test agrees" : "; plain norm test differs";
  } else {
    note += "; zero member";
  }
  rep.add("concordance", agree, res, note);
  return rep;
}

CheckReport case_prop1(Ctx& c) {
  SelfAdjoint u(random_self_adjoint(c.model, c.n, c.rng));
  SelfAdjoint v(random_self_adjoint(c.model, c.n, c.rng));
  if (c.rng.coin()) {
    const auto fam = square_family(c.model, c.n, 4, c.rng, true, false);
    u = SelfAdjoint(fam[0] - fam[1]);
    v = SelfAdjoint(fam[2] - fam[3]);
  }
  const auto r = check_prop1(u, v);
  CheckReport rep;
  rep.add("consistent", r.consistent, r.residual, r.orthogonal ? "orthogonal" : "not orthogonal");
  return rep;
}

CheckReport case_prop5(Ctx& c) {
  const std::size_t m = c.size();
  Element u = random_element(c.model, m, c.n, c.rng);
  Element v = random_element(c.model, m, c.n, c.rng);
  const bool constructed = c.rng.coin();
  if (constructed) {
    const auto fam = rect_family(c.model, m, c.n, 2, c.rng, false);
    u = fam[0];
    v = fam[1];
  }
  CheckReport rep = keep(check_prop5(u, v), {"agrees-with-ortho", "stack-rows", "stack-cols"});
  if (constructed) rep.add("constructed-orthogonal", ortho_rect(u, v));
  return rep;
}

CheckReport case_prop6(Ctx& c) {
  const std::size_t m = c.size();
  const std::size_t kind = c.rng.index(3);
  Element v = Element::zero(c.model, m, c.n);
  if (kind == 1) v = rect_family(c.model, m, c.n, 1, c.rng, false)[0];
  if (kind == 2) v = random_element(c.model, m, c.n, c.rng);
  CheckReport rep = keep(check_zero_prop(v), {"equivalent"});
  rep.add("zero-as-constructed", is_zero(v) == (kind == 0));
  return rep;
}

CheckReport case_norm(Ctx& c) {
  const std::size_t m = c.size();
  const Element v = c.rng.uniform(0.1, 3.0) * random_element(c.model, m, c.n, c.rng);
  CheckReport rep = check_norm_prop(v);
  const double gap = std::abs(order_unit_norm(v) - spectral_norm(v));
  rep.add("bisection-vs-singular", gap <= 1e-8, gap);
  return rep;
}

CheckReport case_remark3(Ctx& c) {
  const std::size_t m = c.size();
  const Element v = random_element(c.model, m, c.n, c.rng);
  return check_remark3(v, random_isometry(m + c.rng.index(2), m, c.rng));
}

CheckReport case_remark4(Ctx& c) {
  CheckReport rep;
  const auto pair = [&](std::size_t n) {
    if (c.rng.coin()) {
      const auto fam = square_family(c.model, n, 2, c.rng, true, false);
      return std::pair{fam[0], fam[1]};
    }
    return std::pair{random_positive(c.model, n, c.rng), random_positive(c.model, n, c.rng)};
  };
  const auto [u1, u2] = pair(c.n);
  const auto [v1, v2] = pair(c.size());
  rep.merge(check_remark4_sum(u1, v1, u2, v2));
  const std::size_t m = c.size();
  if (c.rng.coin()) {
    const auto fam = rect_family(c.model, m, c.n, 2, c.rng, false);
    rep.merge(check_remark4_rect(fam[0], fam[1]));
  } else {
    rep.merge(check_remark4_rect(random_element(c.model, m, c.n, c.rng), random_element(c.model, m, c.n, c.rng)));
  }
  return rep;
}

CheckReport case_remark7(Ctx& c) {
  CheckReport rep;
  if (c.rng.coin()) {
    const auto fam = square_family(c.model, c.n, 2, c.rng, true, true);
    rep.merge(check_remark7_2(Projection(fam[0]), Projection(fam[1])));
    rep.merge(check_remark7_3(fam[0], fam[1]), "3:");
  } else {
    const auto p = ranked_projection(c, c.n, random_ranks(c.model, c.n, c.n, c.rng));
    const auto q = ranked_projection(c, c.n, random_ranks(c.model, c.n, c.n, c.rng));
    rep.merge(check_remark7_2(p, q));
    const auto fam = square_family(c.model, c.n, 2, c.rng, true, false);
    rep.merge(check_remark7_3((1.0 / 2.0) * fam[0], (1.0 / 2.0) * fam[1]), "3:");
  }
  return rep;
}

Element maybe_partial_isometry(Ctx& c, std::size_t m) {
  if (c.rng.coin()) return random_partial_isometry(c.model, m, c.n, random_ranks(c.model, m, c.n, c.rng), c.rng);
  return rect_family(c.model, m, c.n, 1, c.rng, false)[0];
}

CheckReport case_remark8(Ctx& c) { return check_remark8(maybe_partial_isometry(c, c.size())); }

CheckReport case_prop9(Ctx& c) {
  CheckReport rep = check_prop9(maybe_partial_isometry(c, c.size()));
  if (c.rng.coin()) {
    const auto fam = square_family(c.model, c.n, 2, c.rng, true, true);
    rep.merge(check_prop9(fam[0] - fam[1]), "sa:");
  } else {
    rep.merge(check_prop9(random_self_adjoint(c.model, c.n, c.rng)), "sa:");
  }
  return rep;
}

CheckReport case_cor10(Ctx& c) {
  const std::size_t m = c.size();
  auto fam = rect_family(c.model, m, c.n, 2 + c.rng.index(2), c.rng, true);
  if (c.rng.coin()) fam[c.rng.index(fam.size())] *= c.rng.uniform(0.3, 0.8);
  return check_cor10(fam);
}

CheckReport case_prop11(Ctx& c) {
  const std::size_t m = c.size();
  const auto pick = [&](std::size_t n) -> Element {
    if (c.rng.index(4) == 0) return random_positive(c.model, n, c.rng);
    return ranked_projection(c, n, random_ranks(c.model, n, n, c.rng)).element();
  };
  return check_prop11(pick(c.n), pick(m));
}

CheckReport case_lemma12(Ctx& c) {
  return unitary_conj_abs(random_unitary(c.n, c.rng), random_element(c.model, c.n, c.n, c.rng));
}

CheckReport case_conj(Ctx& c) {
  const CMat alpha = random_isometry(c.n + c.rng.index(2), c.n, c.rng);
  CheckReport rep;
  const auto p = ranked_projection(c, c.n, random_ranks(c.model, c.n, c.n, c.rng));
  const Projection img = isometry_conj_proj(alpha, p);
  const double tr = elem_residual(img, scalar_act(alpha, p, alpha.adjoint()));
  rep.add("projection", tr <= c.model.tol().eps_eq, img.residual());
  const auto fam = square_family(c.model, c.n, 2, c.rng, true, false);
  rep.merge(isometry_conj_ortho(alpha, fam[0], fam[1]));
  return rep;
}

// u = L_r R_r* per block and a rank-k sub-projection of its support.
std::pair<PartialIsometry, Projection> cut_instance(Ctx& c, std::size_t m) {
  std::vector<CMat> ub, pb;
  for (std::size_t d : c.model.block_dims()) {
    const CMat l = random_unitary(m * d, c.rng);
    const CMat r = random_unitary(c.n * d, c.rng);
    const std::size_t rank = c.rng.index(std::min(m, c.n) * d + 1);
    const std::size_t k = c.rng.index(rank + 1);
    ub.push_back(leading(l, rank) * leading(r, rank).adjoint());
    pb.push_back(gram(leading(r, rank) * leading(random_unitary(rank, c.rng), k)));
  }
  return {PartialIsometry(Element(c.model, m, c.n, ub)), Projection(Element(c.model, c.n, c.n, pb))};
}

CheckReport case_H(Ctx& c) {
  const auto [u, p] = cut_instance(c, c.size());
  const auto u1 = cond_H_witness(u, p);
  CheckReport rep;
  const double r = elem_residual(abs_rect(u1), p);
  rep.add("certified", r <= c.model.tol().eps_eq && ortho_rect(u1, u.element() - u1.element()), r);
  return rep;
}

CheckReport case_T(Ctx& c) {
  const std::size_t m = c.size(), l = c.size();
  std::vector<CMat> ub, vb;
  for (std::size_t d : c.model.block_dims()) {
    const CMat r = random_unitary(c.n * d, c.rng);
    const std::size_t rank = c.rng.index(std::min({m, l, c.n}) * d + 1);
    ub.push_back(leading(random_unitary(m * d, c.rng), rank) * leading(r, rank).adjoint());
    vb.push_back(leading(random_unitary(l * d, c.rng), rank) * leading(r, rank).adjoint());
  }
  const PartialIsometry u(Element(c.model, m, c.n, ub));
  const PartialIsometry v(Element(c.model, l, c.n, vb));
  const auto w = cond_T_witness(u, v);
  CheckReport rep;
  const double r = std::max(elem_residual(abs_rect(w), u.range()), elem_residual(abs_rect(w.element().adjoint()), v.range()));
  rep.add("certified", r <= c.model.tol().eps_eq, r);
  return rep;
}

CheckReport case_lemma13(Ctx& c) {
  // p1 <= p from one frame; q any projection of the same ranks
  const std::size_t m = c.size();
  std::vector<CMat> pb, p1b;
  std::vector<std::size_t> ranks;
  for (std::size_t d : c.model.block_dims()) {
    const CMat f = random_unitary(c.n * d, c.rng);
    const std::size_t rank = c.rng.index(std::min(c.n, m) * d + 1);
    const std::size_t k = c.rng.index(rank + 1);
    ranks.push_back(rank);
    pb.push_back(gram(leading(f, rank)));
    p1b.push_back(gram(leading(f, rank) * leading(random_unitary(rank, c.rng), k)));
  }
  const Projection p(Element(c.model, c.n, c.n, pb));
  const Projection p1(Element(c.model, c.n, c.n, p1b));
  const auto q = ranked_projection(c, m, ranks);
  const auto s = lemma13_split(equivalent(p, q), p1);
  CheckReport rep;
  rep.add("split", leq(s.q1, q), std::max(s.w1.residual, s.w2.residual));
  return rep;
}

std::vector<Projection> preorder_sample(Ctx& c) {
  std::vector<Projection> ps;
  for (int i = 0; i < 5; ++i) {
    const std::size_t n = c.size();
    ps.push_back(ranked_projection(c, n, small_ranks(c, n, 2)));
  }
  return ps;
}

CheckReport case_prop14(Ctx& c) {
  CheckReport all = check_preorder(preorder_sample(c));
  CheckReport rep;
  for (const auto& cl : all.clauses)
    if (cl.label == "reflexive" || cl.label == "symmetric" || cl.label == "transitive-equiv" || cl.label == "decisions")
      rep.clauses.push_back(cl);
  return rep;
}

CheckReport case_prop15(Ctx& c) {
  std::vector<CMat> pb, ppb, qb, qpb;
  for (std::size_t d : c.model.block_dims()) {
    const std::size_t dim = c.n * d;
    const CMat fp = random_unitary(dim, c.rng);
    const CMat fq = random_unitary(dim, c.rng);
    const std::size_t k = c.rng.index(dim + 1);
    const std::size_t kp = c.rng.index(dim - k + 1);
    pb.push_back(gram(fp.block(0, 0, dim, k)));
    ppb.push_back(gram(fp.block(0, k, dim, kp)));
    // same ranks, placed differently in the second frame
    qb.push_back(gram(fq.block(0, dim - k, dim, k)));
    qpb.push_back(gram(fq.block(0, 0, dim, kp)));
  }
  const auto mk = [&](std::vector<CMat>& b) { return Projection(Element(c.model, c.n, c.n, std::move(b))); };
  const Projection p = mk(pb), pp = mk(ppb), q = mk(qb), qp = mk(qpb);
  CheckReport rep = check_prop15(p, q, pp, qp);
  bool skipped = false;
  for (const auto& cl : rep.clauses) skipped = skipped || cl.note == "skipped";
  rep.add("no-skips", !skipped);
  return rep;
}

CheckReport case_prop16(Ctx& c) {
  CheckReport all = check_preorder(preorder_sample(c));
  CheckReport rep;
  for (const auto& cl : all.clauses)
    if (cl.label == "reflexive" || cl.label == "transitive-sub" || cl.label == "decisions") rep.clauses.push_back(cl);
  // p ⪯ r and q ⪯ s by construction
  const std::size_t m = c.size();
  const auto r_ranks = random_ranks(c.model, m, m, c.rng);
  const auto s_ranks = random_ranks(c.model, c.n, c.n, c.rng);
  std::vector<std::size_t> p_ranks, q_ranks;
  const std::size_t pn = c.size(), qn = c.size();
  for (std::size_t j = 0; j < r_ranks.size(); ++j) {
    p_ranks.push_back(c.rng.index(std::min(r_ranks[j], pn * c.model.dim(j)) + 1));
    q_ranks.push_back(c.rng.index(std::min(s_ranks[j], qn * c.model.dim(j)) + 1));
  }
  rep.merge(check_prop16_oplus(ranked_projection(c, pn, p_ranks), ranked_projection(c, qn, q_ranks),
                               ranked_projection(c, m, r_ranks), ranked_projection(c, c.n, s_ranks)),
            "(2):");
  return rep;
}

CheckReport case_prop17(Ctx& c) {
  const std::size_t m = c.size();
  const auto q_ranks = random_ranks(c.model, c.n, c.n, c.rng);
  std::vector<std::size_t> p_ranks;
  const bool below = c.rng.coin();
  for (std::size_t j = 0; j < q_ranks.size(); ++j)
    p_ranks.push_back(below ? c.rng.index(std::min(q_ranks[j], m * c.model.dim(j)) + 1)
                            : c.rng.index(m * c.model.dim(j) + 1));
  bool oracle = true;
  for (std::size_t j = 0; j < q_ranks.size(); ++j) oracle = oracle && p_ranks[j] <= q_ranks[j];
  const auto p = ranked_projection(c, m, p_ranks);
  const auto q = ranked_projection(c, c.n, q_ranks);
  CheckReport rep;
  try {
    const auto s = subequivalent(p, q);
    const bool back = !raises_rank_error([&] { equivalent(q, proj_direct_sum(p, s.p0)); });
    rep.add("round-trip", oracle && back, s.complement.residual);
  } catch (const RankError&) {
    rep.add("round-trip", !oracle, 0.0, "not subequivalent");
  }
  return rep;
}

CheckReport case_prop18(Ctx& c) {
  const auto p_ranks = random_ranks(c.model, c.n, c.n, c.rng);
  const auto q_ranks = maybe_equal_ranks(c, c.n, p_ranks);
  const auto p = ranked_projection(c, c.n, p_ranks);
  const auto q = ranked_projection(c, c.n, q_ranks);
  const Element e = Element::unit(c.model, c.n);
  const bool a = !raises_rank_error([&] { equivalent(p, q); });
  const bool b = !raises_rank_error([&] { equivalent(Projection(e - p.element()), Projection(e - q.element())); });
  CheckReport rep;
  try {
    const auto ue = unitarily_equivalent(p, q);
    rep.add("round-trip", a && b && p_ranks == q_ranks, std::max(ue.v.residual, ue.w.residual));
  } catch (const RankError&) {
    rep.add("round-trip", !(a && b) && p_ranks != q_ranks, 0.0, "not unitarily equivalent");
  }
  return rep;
}

CheckReport case_cor_u(Ctx& c) {
  const std::size_t m = c.size();
  const auto p_ranks = random_ranks(c.model, c.n, c.n, c.rng);
  const auto p = ranked_projection(c, c.n, p_ranks);
  const auto q = ranked_projection(c, m, maybe_equal_ranks(c, m, p_ranks));
  return check_cor_u(p, q);
}

CheckReport case_prop19(Ctx& c) {
  const auto p = ranked_projection(c, c.n, random_ranks(c.model, c.n, c.n, c.rng));
  return scalar_unitary_conj_equiv(p, random_unitary(c.n, c.rng), random_isometry(c.n + c.rng.index(2), c.n, c.rng));
}

CheckReport case_matrix_finiteness(Ctx& c) {
  CheckReport rep;
  const auto p = ranked_projection(c, c.n, random_ranks(c.model, c.n, c.n, c.rng));
  rep.merge(is_finite_matrix(p, 50, c.rng.next()), "finite:");
  rep.merge(verify_isometry_unitary(random_square_isometry(c.model, c.n, c.rng)), "isometry:");
  const auto fam = square_family(c.model, c.n, 3, c.rng, true, true);
  const Projection p1(fam[0]), p2(fam[1]);
  const Projection q(fam[0] + fam[1] + fam[2]);
  rep.merge(check_remark20(p1, p2, q, c.rng.next()), "remark:");
  return rep;
}

CheckReport case_cardinal(Ctx& c) {
  const auto full = card_default_grid();
  if (c.seed == derive_seed(c.opt.seed, 0)) return card_check_section5(full);
  std::vector<ExtNat> grid;
  for (const auto& x : full)
    if (c.rng.coin()) grid.push_back(x);
  return card_check_section5(grid, 1 + c.rng.index(8));
}

struct SuiteEntry {
  SuiteInfo info;
  CaseFn fn;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r = {
      {{"axioms", "absolute value axioms and the orthogonality characterisation on self-adjoint triples"}, case_axioms},
      {{"ortho", "orthogonality of positives: order, algebraic and norm-additive characterisations agree"}, case_ortho},
      {{"prop1", "u ⊥ v iff the parts are mutually orthogonal iff |u ± v| = |u| + |v|"}, case_prop1},
      {{"prop5", "orthogonality of rectangular elements through suspensions and stacking"}, case_prop5},
      {{"prop6", "v = 0 iff |v| = 0 iff |v*| = 0"}, case_prop6},
      {{"norm", "||v|| = |||v||| = |||v*|||, and the bisection norm equals the largest singular value"}, case_norm},
      {{"remark3", "isometry invariance, suspension and positivity of [[|v*|, v], [v*, |v|]]"}, case_remark3},
      {{"remark4", "direct sums and suspensions preserve orthogonality"}, case_remark4},
      {{"remark7", "four-way orthogonality of projections and projections from orthogonal sums"}, case_remark7},
      {{"remark8", "partial isometries through off-diagonal and diagonal suspensions"}, case_remark8},
      {{"prop9", "partial symmetries and partial isometries through positive and negative parts"}, case_prop9},
      {{"cor10", "an orthogonal family is partial isometric iff its sum is"}, case_cor10},
      {{"prop11", "p ⊕ q is a projection iff p and q are"}, case_prop11},
      {{"lemma12", "|α* v α| = α* |v| α for scalar unitaries"}, case_lemma12},
      {{"conj", "isometry conjugation preserves projections and orthogonality"}, case_conj},
      {{"H", "condition (H): u p is an orthogonal cut of u with |u p| = p"}, case_H},
      {{"T", "condition (T): v u* links partial isometries with a common support"}, case_T},
      {{"lemma13", "splitting p ~ q along p1 <= p"}, case_lemma13},
      {{"prop14", "~ is an equivalence relation"}, case_prop14},
      {{"prop15", "~ under sums, direct sums, zero padding, flips and association"}, case_prop15},
      {{"prop16", "⪯ is reflexive, transitive and compatible with direct sums"}, case_prop16},
      {{"prop17", "p ⪯ q iff q ~ p ⊕ p0 for some projection p0"}, case_prop17},
      {{"prop18", "p ~u q iff p ~ q and e - p ~ e - q"}, case_prop18},
      {{"cor-u", "p ~ q iff p ⊕ 0 ~u q ⊕ 0 iff 0 ⊕ p ~u 0 ⊕ q"}, case_cor_u},
      {{"prop19", "p ~u δ* p δ for scalar unitaries and α p α* ~ p for isometries"}, case_prop19},
      {{"sec5-matrix", "in matrix algebras isometries are unitary, every projection is finite, and finiteness passes to sums below a finite projection"}, case_matrix_finiteness},
      {{"sec5-cardinal", "infinite and properly infinite projections on ℓ²: characterisations, heredity, sums and strictly decreasing chains"}, case_cardinal},
  };
  return r;
}

const SuiteEntry& find_entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.info.id == id) return e;
  throw Error(ErrorKind::PreconditionViolated, "unknown suite \"" + id + "\"");
}

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> c = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return c;
}

bool is_known_suite(const std::string& id) {
  return std::any_of(registry().begin(), registry().end(), [&](const SuiteEntry& e) { return e.info.id == id; });
}

CheckReport run_suite_case(const std::string& id, const std::vector<std::size_t>& block_dims, std::size_t n,
                           std::uint64_t case_seed, const SuiteOptions& options) {
  const SuiteEntry& entry = find_entry(id);
  const Model model(block_dims, options.tol);
  Rng rng(case_seed);
  Ctx ctx{model, n, rng, options, case_seed};
  return entry.fn(ctx);
}

SuiteReport run_suite(const SuiteOptions& options) {
  find_entry(options.id);
  if (options.dims.empty() || options.blocks.empty())
    throw Error(ErrorKind::PreconditionViolated, "dims and blocks must be nonempty");
  options.tol.validate();

  struct Outcome {
    bool pass = false;
    double residual = 0.0;
    std::string operation;
    std::string detail;
  };
  std::vector<Outcome> outcomes(options.cases);
  const auto layout = [&](std::size_t i) {
    return std::pair{options.dims[i % options.dims.size()],
                     options.blocks[(i / options.dims.size()) % options.blocks.size()]};
  };
  const auto run_one = [&](std::size_t i) {
    const auto [n, blocks] = layout(i);
    Outcome& o = outcomes[i];
    try {
      const CheckReport rep = run_suite_case(options.id, blocks, n, derive_seed(options.seed, i), options);
      o.pass = rep.all_pass();
      o.residual = rep.worst_residual();
      if (!o.pass) {
        o.operation = options.id;
        o.detail = rep.failures();
      }
    } catch (const Error& e) {
      o.operation = options.id;
      o.residual = e.residual();
      o.detail = e.what();
    }
  };

  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, options.cases));
  if (threads <= 1) {
    for (std::size_t i = 0; i < options.cases; ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < options.cases; i += threads) run_one(i);
      });
    for (auto& th : pool) th.join();
  }

  SuiteReport rep;
  rep.id = options.id;
  rep.seed = options.seed;
  rep.cases = options.cases;
  rep.dims = options.dims;
  rep.blocks = options.blocks;
  rep.timestamp = now_utc();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (std::isfinite(o.residual)) rep.worst_residual = std::max(rep.worst_residual, o.residual);
    if (o.pass) {
      ++rep.passed;
      continue;
    }
    const auto [n, blocks] = layout(i);
    rep.failures.push_back({i, derive_seed(options.seed, i), n, blocks, o.operation, o.residual, o.detail});
  }
  return rep;
}

json SuiteReport::to_json(bool with_timestamp) const {
  json j;
  j["suite"] = id;
  j["seed"] = seed;
  j["cases"] = cases;
  j["passed"] = passed;
  j["failed"] = failures.size();
  j["worst_residual"] = worst_residual;
  j["dims"] = dims;
  j["blocks"] = blocks;
  json f = json::array();
  for (const auto& x : failures) {
    f.push_back({{"case", x.index},
                 {"seed", x.seed},
                 {"n", x.n},
                 {"blocks", x.blocks},
                 {"operation", x.operation},
                 {"residual", std::isfinite(x.residual) ? json(x.residual) : json("inf")},
                 {"detail", x.detail}});
  }
  j["failures"] = std::move(f);
  if (with_timestamp) j["timestamp"] = timestamp;
  return j;
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << id << ": " << passed << "/" << cases << " passed, worst residual " << std::setprecision(3) << worst_residual;
  for (const auto& f : failures) os << "\n  case " << f.index << " (seed " << f.seed << "): " << f.detail;
  return os.str();
}

}  // namespace ordproj
