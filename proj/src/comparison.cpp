#include "ordproj/comparison.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "ordproj/absolute_order.hpp"
#include "ordproj/error.hpp"
#include "ordproj/matrix_order.hpp"

namespace ordproj {

namespace {

std::string ranks_str(const std::vector<std::size_t>& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ')';
  return os.str();
}

Projection certified(const Element& x, const char* what) {
  auto p = try_projection(x);
  if (!p) throw Error(ErrorKind::CertificationFailed, std::string(what) + " is not a projection",
                      projection_residual(x));
  return *p;
}

PartialIsometry certified_pi(const Element& v, const char* what) {
  try {
    return PartialIsometry(v);
  } catch (const Error&) {
    throw Error(ErrorKind::CertificationFailed, std::string(what) + " is not a partial isometry");
  }
}

Element zero_sq(const Model& model, std::size_t n) { return Element::zero(model, n, n); }

Element unit_like(const Element& p) { return Element::unit(p.model(), p.rows()); }

// Columns spanning the range of each block, descending eigenvalue order.
std::vector<CMat> range_bases(const Element& p) {
  std::vector<CMat> out;
  for (const auto& b : p.blocks()) out.push_back(eigenspace_above(b, 0.5, p.tol()));
  return out;
}

CMat outer(const CMat& a, const CMat& b) {
  if (a.cols() == 0) return CMat::zeros(a.rows(), b.rows());
  return a * b.adjoint();
}

double unitary_residual(const Element& u) {
  const Element e_l = Element::unit(u.model(), u.rows());
  const Element e_r = Element::unit(u.model(), u.cols());
  return std::max(elem_residual(product(u.adjoint(), u), e_r), elem_residual(product(u, u.adjoint()), e_l));
}

double scalar_unitary_residual(const CMat& a) {
  const CMat id = CMat::identity(a.rows());
  return std::max(eq_residual(a.adjoint() * a, id), eq_residual(a * a.adjoint(), id));
}

// a realises p ~ q, b realises q ~ r; the (T) product gives p ~ r.
EquivalenceWitness compose(const EquivalenceWitness& a, const EquivalenceWitness& b) {
  const PartialIsometry w = cond_T_witness(a.v, PartialIsometry(b.v.element().adjoint()));
  return certify_equivalence(w.element().adjoint(), a.p, b.q);
}

void aggregate(CheckReport& rep, const std::string& label, std::size_t checked,
               const std::vector<std::string>& fails, double worst) {
  std::string note = std::to_string(checked) + " checked";
  if (!fails.empty()) {
    note += "; failed:";
    for (const auto& f : fails) note += " " + f;
  }
  rep.add(label, fails.empty(), worst, note);
}

}  // namespace

EquivalenceWitness certify_equivalence(const Element& v, const Projection& p, const Projection& q) {
  if (v.rows() != p.size() || v.cols() != q.size())
    throw Error(ErrorKind::ShapeMismatch, "witness shape does not match the projections");
  const PartialIsometry pi = certified_pi(v, "witness");
  const double r = std::max(elem_residual(pi.range(), p), elem_residual(pi.support(), q));
  if (!(r <= v.tol().eps_eq))
    throw Error(ErrorKind::CertificationFailed, "|v*| = p, |v| = q fails", r);
  return EquivalenceWitness{pi, p, q, r};
}

EquivalenceWitness equivalent(const Projection& p, const Projection& q) {
  require_same_model(p, q, "equivalent");
  const auto rp = projection_ranks(p);
  const auto rq = projection_ranks(q);
  if (rp != rq)
    throw RankError(ErrorKind::NotEquivalent, "ranks " + ranks_str(rp) + " vs " + ranks_str(rq), rp, rq);
  const auto xi = range_bases(p);
  const auto eta = range_bases(q);
  const Element v = Element::generate(p.model(), p.size(), q.size(),
                                      [&](std::size_t j, std::size_t) { return outer(xi[j], eta[j]); });
  return certify_equivalence(v, p, q);
}

PartialIsometry cond_H_witness(const PartialIsometry& u, const Projection& p) {
  require_same_model(u, p, "cond_H_witness");
  if (p.size() != u.element().cols()) throw Error(ErrorKind::ShapeMismatch, "p must be n x n for u in M_{m,n}");
  if (!leq(p, u.support())) throw Error(ErrorKind::NotDominated, "p is not below |u|");
  const Element u1 = product(u, p);
  const PartialIsometry w = certified_pi(u1, "u p");
  const double r = elem_residual(w.support(), p);
  if (!(r <= u1.tol().eps_eq)) throw Error(ErrorKind::CertificationFailed, "|u p| differs from p", r);
  if (!ortho_rect(u1, u.element() - u1))
    throw Error(ErrorKind::CertificationFailed, "u p is not orthogonal to u - u p");
  return w;
}

PartialIsometry cond_T_witness(const PartialIsometry& u, const PartialIsometry& v) {
  require_same_model(u, v, "cond_T_witness");
  if (u.element().cols() != v.element().cols())
    throw Error(ErrorKind::ShapeMismatch, "u and v need the same column count");
  const double s = elem_residual(u.support(), v.support());
  if (!(s <= u.element().tol().eps_eq)) throw Error(ErrorKind::SupportMismatch, "|u| differs from |v|", s);
  const Element w = product(v, u.element().adjoint());
  const Element ua = u.element().adjoint();
  const Element va = v.element().adjoint();
  const double r = std::max(elem_residual(product(w.adjoint(), w), product(u, ua)),
                            elem_residual(product(w, w.adjoint()), product(v, va)));
  if (!(r <= w.tol().eps_eq)) throw Error(ErrorKind::CertificationFailed, "w*w = uu*, ww* = vv* fails", r);
  return certified_pi(w, "v u*");
}

Lemma13Split lemma13_split(const EquivalenceWitness& w, const Projection& p1) {
  require_same_model(w.p, p1, "lemma13_split");
  if (p1.size() != w.p.size()) throw Error(ErrorKind::ShapeMismatch, "p1 must have the shape of p");
  if (!leq(p1, w.p)) throw Error(ErrorKind::NotDominated, "p1 is not below p");
  const Element v1 = product(p1, w.v);
  const PartialIsometry pi1 = certified_pi(v1, "p1 v");
  const Projection q1 = pi1.support();
  if (!leq(q1, w.q)) throw Error(ErrorKind::CertificationFailed, "q1 is not below q");
  EquivalenceWitness w1 = certify_equivalence(v1, p1, q1);
  const Projection pr = certified(w.p.element() - p1.element(), "p - p1");
  const Projection qr = certified(w.q.element() - q1.element(), "q - q1");
  EquivalenceWitness w2 = certify_equivalence(w.v.element() - v1, pr, qr);
  return Lemma13Split{q1, std::move(w1), std::move(w2)};
}

SubEquivalenceWitness subequivalent(const Projection& p, const Projection& q) {
  require_same_model(p, q, "subequivalent");
  const auto rp = projection_ranks(p);
  const auto rq = projection_ranks(q);
  for (std::size_t j = 0; j < rp.size(); ++j)
    if (rp[j] > rq[j])
      throw RankError(ErrorKind::NotSubEquivalent, "ranks " + ranks_str(rp) + " vs " + ranks_str(rq), rp, rq);
  const auto eta = range_bases(q);
  const Element r_el = Element::generate(q.model(), q.size(), q.size(), [&](std::size_t j, std::size_t) {
    const CMat h = eta[j].block(0, 0, eta[j].rows(), rp[j]);
    return hermitian_part(outer(h, h));
  });
  const Projection r = certified(r_el, "r");
  if (!leq(r, q)) throw Error(ErrorKind::CertificationFailed, "r is not below q");
  EquivalenceWitness inner = equivalent(p, r);
  const Projection p0 = certified(q.element() - r.element(), "q - r");
  // [v*, p0] realises q ~ p ⊕ p0
  const Element y = stack_cols(inner.v.element().adjoint(), p0);
  EquivalenceWitness complement = certify_equivalence(y, q, proj_direct_sum(p, p0));
  return SubEquivalenceWitness{r, std::move(inner), p0, std::move(complement)};
}

UnitaryEquivalence unitarily_equivalent(const Projection& p, const Projection& q) {
  require_same_model(p, q, "unitarily_equivalent");
  require_same_shape(p, q, "unitarily_equivalent");
  const Element e = unit_like(p);
  try {
    EquivalenceWitness v = equivalent(p, q);
    EquivalenceWitness w = equivalent(Projection(e - p.element()), Projection(e - q.element()));
    Element u = v.v.element() + w.v.element();
    const double r = unitary_residual(u);
    if (!(r <= e.tol().eps_eq)) throw Error(ErrorKind::CertificationFailed, "v + w is not unitary", r);
    if (!ortho_rect(v.v, w.v)) throw Error(ErrorKind::CertificationFailed, "v and w are not orthogonal");
    return UnitaryEquivalence{std::move(u), std::move(v), std::move(w)};
  } catch (const RankError& err) {
    throw RankError(ErrorKind::NotUnitarilyEquivalent, err.what(), err.lhs_ranks(), err.rhs_ranks());
  }
}

Element cor_u_unitary(const EquivalenceWitness& w) {
  const Element& v = w.v;
  const Element ep = unit_like(w.p) - w.p.element();
  const Element eq = unit_like(w.q) - w.q.element();
  return stack_rows(stack_cols(v.adjoint(), eq), stack_cols(ep, v));
}

CheckReport check_prop15_clause(int clause, const Projection& p, const Projection& q, const Projection& pp,
                                const Projection& qp) {
  const Model& model = p.model();
  const std::size_t m = p.size();
  const std::size_t n = q.size();
  const auto witness = [](const Projection& a, const Projection& b) {
    try {
      return equivalent(a, b);
    } catch (const RankError& e) {
      throw Error(ErrorKind::PreconditionViolated, e.what());
    }
  };
  CheckReport rep;
  const std::string label = "(" + std::to_string(clause) + ")";
  switch (clause) {
    case 1: {
      const Element z = Element::zero(model, n, m);
      const auto a = certify_equivalence(stack_rows(p, z), proj_direct_sum(p, Projection(zero_sq(model, n))), p);
      const auto b = certify_equivalence(stack_rows(z, p), proj_direct_sum(Projection(zero_sq(model, n)), p), p);
      rep.add(label, true, std::max(a.residual, b.residual));
      break;
    }
    case 2: {
      if (pp.size() != m || qp.size() != n)
        throw Error(ErrorKind::PreconditionViolated, "clause (2) needs p, p' and q, q' of equal sizes");
      if (!ortho_pos(p, pp) || !ortho_pos(q, qp))
        throw Error(ErrorKind::PreconditionViolated, "clause (2) needs p ⊥ p' and q ⊥ q'");
      const auto v = witness(p, q);
      const auto vp = witness(pp, qp);
      const auto w = certify_equivalence(v.v.element() + vp.v.element(), certified(p.element() + pp.element(), "p + p'"),
                                         certified(q.element() + qp.element(), "q + q'"));
      rep.add(label, true, w.residual);
      break;
    }
    case 3: {
      const auto v = witness(p, q);
      const auto vp = witness(pp, qp);
      const auto w = certify_equivalence(oplus(v.v, vp.v), proj_direct_sum(p, pp), proj_direct_sum(q, qp));
      rep.add(label, true, w.residual);
      break;
    }
    case 4: {
      const Element x = stack_rows(stack_cols(Element::zero(model, n, m), q), stack_cols(p, Element::zero(model, m, n)));
      const auto w = certify_equivalence(x, proj_direct_sum(q, p), proj_direct_sum(p, q));
      rep.add(label, true, w.residual);
      break;
    }
    case 5: {
      if (pp.size() != m || !ortho_pos(p, pp))
        throw Error(ErrorKind::PreconditionViolated, "clause (5) needs p ⊥ p' of equal size");
      const auto w = certify_equivalence(stack_cols(p, pp), certified(p.element() + pp.element(), "p + p'"),
                                         proj_direct_sum(p, pp));
      rep.add(label, true, w.residual);
      break;
    }
    case 6: {
      const Element l = oplus(oplus(p, q), pp);
      const Element r = oplus(p, oplus(q, pp));
      rep.add(label, l.blocks() == r.blocks() && l.rows() == r.rows(), 0.0);
      break;
    }
    default:
      throw Error(ErrorKind::PreconditionViolated, "clauses are numbered 1 to 6");
  }
  return rep;
}

CheckReport check_prop15(const Projection& p, const Projection& q, const Projection& pp, const Projection& qp) {
  CheckReport rep;
  for (int c = 1; c <= 6; ++c) {
    const std::string label = "(" + std::to_string(c) + ")";
    try {
      rep.merge(check_prop15_clause(c, p, q, pp, qp));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PreconditionViolated)
        rep.add(label, true, 0.0, "skipped");
      else
        rep.add(label, false, e.residual(), e.what());
    }
  }
  return rep;
}

CheckReport check_preorder(const std::vector<Projection>& ps) {
  CheckReport rep;
  const std::size_t n = ps.size();
  for (std::size_t i = 1; i < n; ++i) require_same_model(ps[0], ps[i], "check_preorder");

  std::vector<std::vector<std::optional<EquivalenceWitness>>> eq(n);
  std::vector<std::vector<std::optional<SubEquivalenceWitness>>> sub(n);
  std::vector<std::vector<std::size_t>> ranks;
  for (const auto& p : ps) ranks.push_back(projection_ranks(p));

  std::vector<std::string> refl_fail;
  double refl_worst = 0.0;
  std::vector<std::string> decide_fail;
  for (std::size_t i = 0; i < n; ++i) {
    eq[i].resize(n);
    sub[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ri = ranks[i];
      const auto& rj = ranks[j];
      bool le = true;
      for (std::size_t b = 0; b < ri.size(); ++b) le = le && ri[b] <= rj[b];
      try {
        eq[i][j] = equivalent(ps[i], ps[j]);
      } catch (const RankError&) {
      } catch (const Error&) {
        decide_fail.push_back("~" + std::to_string(i) + std::to_string(j));
      }
      try {
        sub[i][j] = subequivalent(ps[i], ps[j]);
      } catch (const RankError&) {
      } catch (const Error&) {
        decide_fail.push_back("<" + std::to_string(i) + std::to_string(j));
      }
      if (eq[i][j].has_value() != (ri == rj) || sub[i][j].has_value() != le)
        decide_fail.push_back(std::to_string(i) + std::to_string(j));
    }
    try {
      const auto w = certify_equivalence(ps[i], ps[i], ps[i]);
      refl_worst = std::max(refl_worst, w.residual);
      if (!eq[i][i] || !sub[i][i]) refl_fail.push_back(std::to_string(i));
    } catch (const Error& e) {
      refl_fail.push_back(std::to_string(i));
      refl_worst = std::max(refl_worst, e.residual());
    }
  }
  aggregate(rep, "decisions", n * n, decide_fail, 0.0);
  aggregate(rep, "reflexive", n, refl_fail, refl_worst);

  std::vector<std::string> sym_fail;
  double sym_worst = 0.0;
  std::size_t sym_count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!eq[i][j]) continue;
      ++sym_count;
      try {
        const auto w = certify_equivalence(eq[i][j]->v.element().adjoint(), ps[j], ps[i]);
        sym_worst = std::max(sym_worst, w.residual);
        if (!eq[j][i]) sym_fail.push_back(std::to_string(i) + std::to_string(j));
      } catch (const Error& e) {
        sym_fail.push_back(std::to_string(i) + std::to_string(j));
        sym_worst = std::max(sym_worst, e.residual());
      }
    }
  aggregate(rep, "symmetric", sym_count, sym_fail, sym_worst);

  std::vector<std::string> teq_fail, tsub_fail;
  double teq_worst = 0.0, tsub_worst = 0.0;
  std::size_t teq_count = 0, tsub_count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::string tag = std::to_string(i) + std::to_string(j) + std::to_string(k);
        if (eq[i][j] && eq[j][k]) {
          ++teq_count;
          try {
            const auto w = compose(*eq[i][j], *eq[j][k]);
            teq_worst = std::max(teq_worst, w.residual);
            if (!eq[i][k]) teq_fail.push_back(tag);
          } catch (const Error& e) {
            teq_fail.push_back(tag);
            teq_worst = std::max(teq_worst, e.residual());
          }
        }
        if (sub[i][j] && sub[j][k]) {
          ++tsub_count;
          try {
            // p_i ~ r1 <= p_j and p_j ~ r2 <= p_k; cut the second along r1.
            const auto& s1 = *sub[i][j];
            const auto& s2 = *sub[j][k];
            const Lemma13Split cut = lemma13_split(s2.inner, s1.r);
            const auto w = compose(s1.inner, cut.w1);
            tsub_worst = std::max(tsub_worst, w.residual);
            if (!leq(cut.q1, s2.r) || !leq(cut.q1, ps[k]) || !sub[i][k]) tsub_fail.push_back(tag);
          } catch (const Error& e) {
            tsub_fail.push_back(tag);
            tsub_worst = std::max(tsub_worst, e.residual());
          }
        }
      }
  aggregate(rep, "transitive-equiv", teq_count, teq_fail, teq_worst);
  aggregate(rep, "transitive-sub", tsub_count, tsub_fail, tsub_worst);
  return rep;
}

CheckReport check_prop16_oplus(const Projection& p, const Projection& q, const Projection& r,
                               const Projection& s) {
  const auto premise = [](const Projection& a, const Projection& b) {
    try {
      return subequivalent(a, b);
    } catch (const RankError& e) {
      throw Error(ErrorKind::PreconditionViolated, e.what());
    }
  };
  const auto a = premise(p, r);
  const auto b = premise(q, s);
  CheckReport rep;
  try {
    const Projection inner = proj_direct_sum(a.r, b.r);
    const auto w = certify_equivalence(oplus(a.inner.v, b.inner.v), proj_direct_sum(p, q), inner);
    rep.add("witness", leq(inner, proj_direct_sum(r, s)), w.residual);
  } catch (const Error& e) {
    rep.add("witness", false, e.residual(), e.what());
  }
  bool decided = true;
  try {
    subequivalent(proj_direct_sum(p, q), proj_direct_sum(r, s));
  } catch (const RankError&) {
    decided = false;
  }
  rep.add("decision", decided);
  return rep;
}

CheckReport check_cor_u(const Projection& p, const Projection& q) {
  require_same_model(p, q, "check_cor_u");
  const Model& model = p.model();
  const std::size_t m = p.size();
  const std::size_t n = q.size();
  const Projection zm(zero_sq(model, m));
  const Projection zn(zero_sq(model, n));
  const auto decide = [](auto&& f) {
    try {
      f();
      return true;
    } catch (const RankError&) {
      return false;
    }
  };
  const bool a = decide([&] { equivalent(p, q); });
  const bool b = decide([&] { unitarily_equivalent(proj_direct_sum(p, zn), proj_direct_sum(q, zm)); });
  const bool c = decide([&] { unitarily_equivalent(proj_direct_sum(zn, p), proj_direct_sum(zm, q)); });
  CheckReport rep;
  rep.add("chain", a == b && b == c, 0.0, a ? "equivalent" : "not equivalent");
  if (!a) return rep;

  const auto w = equivalent(p, q);
  const Element u = cor_u_unitary(w);
  const double ur = unitary_residual(u);
  rep.add("unitary", ur <= u.tol().eps_eq, ur);
  // 0 ⊕ p ~u 0 ⊕ q through u, p ⊕ 0 ~u q ⊕ 0 through u*
  const Element lower = corner_embed(w.v, n, m, n + m, m + n);
  const Element upper = corner_embed(w.v, 0, 0, m + n, n + m);
  const Element ua = u.adjoint();
  try {
    const auto x = certify_equivalence(lower, proj_direct_sum(zn, p), proj_direct_sum(zm, q));
    rep.add("component-lower", ortho_rect(lower, u - lower), x.residual);
  } catch (const Error& e) {
    rep.add("component-lower", false, e.residual(), e.what());
  }
  try {
    const auto x = certify_equivalence(upper, proj_direct_sum(p, zn), proj_direct_sum(q, zm));
    rep.add("component-upper", ortho_rect(upper, ua - upper), x.residual);
  } catch (const Error& e) {
    rep.add("component-upper", false, e.residual(), e.what());
  }
  return rep;
}

CheckReport scalar_unitary_conj_equiv(const Projection& p, const CMat& delta, const CMat& alpha) {
  const TolerancePolicy& tol = p.element().tol();
  if (delta.rows() != p.size() || !delta.is_square())
    throw Error(ErrorKind::ShapeError, "δ must be n x n");
  const double dr = scalar_unitary_residual(delta);
  if (!(dr <= tol.eps_eq)) throw Error(ErrorKind::NotUnitary, "δ is not unitary", dr);
  if (!alpha.empty()) {
    if (alpha.cols() != p.size()) throw Error(ErrorKind::ShapeError, "α must have n columns");
    const double ar = eq_residual(alpha.adjoint() * alpha, CMat::identity(alpha.cols()));
    if (!(ar <= tol.eps_eq)) throw Error(ErrorKind::NotIsometry, "α*α differs from I", ar);
  }

  CheckReport rep;
  const auto run = [&rep](const std::string& label, auto&& f) {
    try {
      const auto [ok, res] = f();
      rep.add(label, ok, res);
    } catch (const Error& e) {
      rep.add(label, false, e.residual(), e.what());
    }
  };
  const Element e = unit_like(p);
  const CMat delta_a = delta.adjoint();
  const Element conj = scalar_act(delta_a, p, delta);
  run("conjugate-projection", [&] { return std::pair{true, certified(conj, "δ*pδ").residual()}; });
  run("explicit-witness", [&] {
    const auto w = certify_equivalence(scalar_left(delta_a, p), certified(conj, "δ*pδ"), p);
    return std::pair{true, w.residual};
  });
  run("unitary-equivalence", [&] {
    const Projection q = certified(conj, "δ*pδ");
    const Element v = scalar_right(p, delta);
    const Element w = scalar_right(e - p.element(), delta);
    const auto wv = certify_equivalence(v, p, q);
    const auto ww = certify_equivalence(w, Projection(e - p.element()), Projection(e - q.element()));
    const Element u = v + w;
    const double ur = unitary_residual(u);
    const bool ok = ur <= tol.eps_eq && ortho_rect(v, w);
    return std::pair{ok, std::max({ur, wv.residual, ww.residual})};
  });
  run("decision", [&] {
    const auto ue = unitarily_equivalent(p, certified(conj, "δ*pδ"));
    return std::pair{true, std::max(ue.v.residual, ue.w.residual)};
  });
  if (!alpha.empty()) {
    run("isometry", [&] {
      const Projection a = isometry_conj_proj(alpha, p);
      const auto w = certify_equivalence(scalar_left(alpha, p), a, p);
      return std::pair{true, w.residual};
    });
  }
  return rep;
}

}  // namespace ordproj
