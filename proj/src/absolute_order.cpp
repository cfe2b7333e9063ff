#include "ordproj/absolute_order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ordproj/error.hpp"
#include "ordproj/matrix_order.hpp"
#include "ordproj/random.hpp"

namespace ordproj {

namespace {

void require_positive(const Element& v, const char* op) {
  if (!is_positive(v)) {
    const double defect = is_self_adjoint(v) ? positivity_defect(v) : 0.0;
    throw Error(ErrorKind::NotPositive, std::string(op) + ": operand is not positive", defect);
  }
}

double rel_gap(double a, double b) { return std::abs(a - b) / std::max({1.0, a, b}); }

}  // namespace

SelfAdjoint abs_sa(const SelfAdjoint& v) {
  return SelfAdjoint(spectral(v.element(), [](double x) { return std::abs(x); }));
}

SelfAdjoint pos_part(const SelfAdjoint& v) {
  return SelfAdjoint(0.5 * (abs_sa(v).element() + v.element()));
}

SelfAdjoint neg_part(const SelfAdjoint& v) {
  return SelfAdjoint(0.5 * (abs_sa(v).element() - v.element()));
}

bool leq(const Element& a, const Element& b) { return is_positive(b - a); }

Element support_projection(const Element& v) {
  const double scale = std::max(1.0, max_frobenius(v));
  const double threshold = v.tol().eps_psd * scale;
  return v.map(v.rows(), v.cols(), [&](const CMat& b, std::size_t) {
    const CMat basis = eigenspace_above(b, threshold, v.tol());
    if (basis.cols() == 0) return CMat(b.rows(), b.cols());
    return hermitian_part(basis * basis.adjoint());
  });
}

double min_positive_eigenvalue(const Element& v) {
  const double threshold = v.tol().eps_psd * std::max(1.0, max_frobenius(v));
  double best = std::numeric_limits<double>::infinity();
  for (const auto& b : v.blocks())
    for (double x : herm_eig(b, v.tol()).values)
      if (x > threshold) best = std::min(best, x);
  return std::isinf(best) ? 0.0 : best;
}

double ortho_pos_residual(const Element& u, const Element& v) {
  require_same_shape(u, v, "ortho_pos");
  require_positive(u, "ortho_pos");
  require_positive(v, "ortho_pos");
  const Element lhs = abs_sa(SelfAdjoint(u - v)).element();
  return elem_residual(lhs, u + v);
}

bool ortho_pos(const Element& u, const Element& v) {
  return ortho_pos_residual(u, v) <= u.tol().eps_eq;
}

double ortho_alg_residual(const Element& u, const Element& v) {
  require_same_shape(u, v, "ortho_alg");
  require_positive(u, "ortho_alg");
  require_positive(v, "ortho_alg");
  double worst = 0.0;
  for (std::size_t j = 0; j < u.blocks().size(); ++j) {
    const CMat& a = u.block(j);
    const CMat& b = v.block(j);
    const double scale = std::max(1.0, a.frobenius() * b.frobenius());
    worst = std::max(worst, (a * b).frobenius() / scale);
  }
  return worst;
}

bool ortho_alg(const Element& u, const Element& v) {
  return ortho_alg_residual(u, v) <= u.tol().eps_eq;
}

double ortho_inf_residual(const Element& u, const Element& v) {
  require_same_shape(u, v, "ortho_inf");
  require_positive(u, "ortho_inf");
  require_positive(v, "ortho_inf");
  const double nu = order_unit_norm(u);
  const double nv = order_unit_norm(v);
  if (is_zero(u) || is_zero(v) || nu == 0.0 || nv == 0.0)
    throw Error(ErrorKind::ZeroElement, "ortho_inf needs nonzero operands");

  double worst = std::abs(order_unit_norm((1.0 / nu) * u + (1.0 / nv) * v) - 1.0);
  for (int e = -3; e <= 3; ++e) {
    const double k = std::ldexp(1.0, e);
    for (double s : {k, -k}) {
      const double lhs = order_unit_norm(u + s * v);
      worst = std::max(worst, rel_gap(lhs, std::max(nu, k * nv)));
    }
  }
  return worst;
}

bool ortho_inf(const Element& u, const Element& v) {
  return ortho_inf_residual(u, v) <= u.tol().eps_eq;
}

bool ortho_inf_hereditary(const Element& u, const Element& v) {
  if (!ortho_inf(u, v)) return false;
  const Element du = min_positive_eigenvalue(u) * support_projection(u);
  const Element dv = min_positive_eigenvalue(v) * support_projection(v);
  return ortho_inf(du, dv);
}

bool ortho_general_sa(const SelfAdjoint& u, const SelfAdjoint& v) {
  return ortho_pos(abs_sa(u), abs_sa(v));
}

Prop1Result check_prop1(const SelfAdjoint& u, const SelfAdjoint& v) {
  require_same_shape(u, v, "check_prop1");
  const double eps = u.element().tol().eps_eq;
  const Element au = abs_sa(u);
  const Element av = abs_sa(v);
  const Element up = pos_part(u), um = neg_part(u);
  const Element vp = pos_part(v), vm = neg_part(v);

  Prop1Result r;
  auto track = [&](double res) { return res <= eps; };

  const double orth = ortho_pos_residual(au, av);
  r.orthogonal = track(orth);

  double parts = 0.0;
  for (const Element* a : {&up, &um})
    for (const Element* b : {&vp, &vm}) parts = std::max(parts, ortho_pos_residual(*a, *b));
  parts = std::max({parts, ortho_pos_residual(up, um), ortho_pos_residual(vp, vm)});
  r.parts_orthogonal = track(parts);

  const Element sum = au + av;
  const double add = std::max(elem_residual(abs_sa(SelfAdjoint(u.element() + v.element())), sum),
                              elem_residual(abs_sa(SelfAdjoint(u.element() - v.element())), sum));
  r.abs_additive = track(add);

  r.consistent = r.orthogonal == r.parts_orthogonal && r.parts_orthogonal == r.abs_additive;
  r.residual = std::max({r.orthogonal ? orth : 0.0,
                         r.parts_orthogonal ? parts : 0.0, r.abs_additive ? add : 0.0});
  return r;
}

bool AxiomReport::all_pass() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomTally& t) { return t.failed == 0; });
}

double AxiomReport::worst_residual() const {
  double worst = 0.0;
  for (const auto& t : axioms) worst = std::max(worst, t.worst);
  return worst;
}

const AxiomTally* AxiomReport::find(const std::string& axiom) const {
  for (const auto& t : axioms)
    if (t.axiom == axiom) return &t;
  return nullptr;
}

Element random_dominated(const Element& b, Rng& rng) {
  const Element root = sqrt_positive(b);
  const Element c = Element::generate(b.model(), b.rows(), b.cols(), [&](std::size_t, std::size_t d) {
    return gaussian(b.rows() * d, b.cols() * d, rng);
  });
  double cn = 0.0;
  for (const auto& blk : c.blocks()) cn = std::max(cn, op_norm(blk, b.tol()));
  const double scale = 1.0 / std::max(1.0, cn * cn);
  const Element w = product(product(root, product(c.adjoint(), c)), root);
  return SelfAdjoint(scale * w).element();
}

namespace {

class Tally {
 public:
  explicit Tally(const TolerancePolicy& tol) : tol_(tol) {}

  // Equality-type statement decided at eps_eq.
  void eq(const std::string& axiom, double residual) { record(axiom, residual, tol_.eps_eq); }
  // Positivity-type statement decided at eps_psd.
  void psd(const std::string& axiom, double defect) { record(axiom, defect, tol_.eps_psd); }
  void truth(const std::string& axiom, bool ok) { record(axiom, ok ? 0.0 : 1.0, 0.5); }

  AxiomReport finish(std::size_t triples) {
    AxiomReport r;
    r.triples = triples;
    for (const char* name : {"abs1", "abs2", "abs3", "abs4", "abs5", "orth1", "orth2", "orth3",
                             "orth4", "orth5", "orth6"}) {
      auto it = std::find_if(rows_.begin(), rows_.end(), [&](const AxiomTally& t) { return t.axiom == name; });
      r.axioms.push_back(it == rows_.end() ? AxiomTally{name, 0, 0, 0.0} : *it);
    }
    return r;
  }

 private:
  void record(const std::string& axiom, double residual, double threshold) {
    auto it = std::find_if(rows_.begin(), rows_.end(), [&](const AxiomTally& t) { return t.axiom == axiom; });
    if (it == rows_.end()) {
      rows_.push_back({axiom, 0, 0, 0.0});
      it = rows_.end() - 1;
    }
    if (residual <= threshold) ++it->passed; else ++it->failed;
    if (threshold < 0.5) it->worst = std::max(it->worst, residual);
  }

  TolerancePolicy tol_;
  std::vector<AxiomTally> rows_;
};

Element complement(const Element& p) { return Element::unit(p.model(), p.rows()) - p; }

Element compress(const Element& q, const Element& x) { return SelfAdjoint(product(product(q, x), q)).element(); }

// a ⊥ b from an independent spectral construction: a shared random eigenbasis
// per block with disjoint positive and negative eigenvalues.
std::pair<Element, Element> constructed_split(const Model& model, std::size_t n, Rng& rng) {
  std::vector<CMat> pos, neg;
  for (std::size_t j = 0; j < model.block_count(); ++j) {
    const std::size_t dim = n * model.dim(j);
    const CMat q = random_unitary(dim, rng);
    std::vector<double> a(dim, 0.0), b(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t pick = rng.index(3);
      const double mag = rng.uniform(0.1, 3.0);
      if (pick == 0) a[i] = mag;
      else if (pick == 1) b[i] = mag;
    }
    pos.push_back(hermitian_part(q * CMat::diagonal(a) * q.adjoint()));
    neg.push_back(hermitian_part(q * CMat::diagonal(b) * q.adjoint()));
  }
  return {Element(model, n, n, std::move(pos)), Element(model, n, n, std::move(neg))};
}

}  // namespace

AxiomReport check_abs_axioms(const Model& model, std::span<const SaTriple> sample,
                             std::uint64_t seed) {
  Tally tally(model.tol());
  Rng rng(seed);
  for (const auto& triple : sample) {
    for (const auto& x : triple) {
      if (!x.model().same_algebra(model))
        throw Error(ErrorKind::ModelMismatch, "sample element from another model");
    }
    const std::size_t n = triple[0].size();

    for (const auto& x : triple) {
      const Element ax = abs_sa(x);
      // (1) positives are fixed; test on |x| and x^2
      const Element sq = SelfAdjoint(product(x.element(), x.element())).element();
      tally.eq("abs1", std::max(elem_residual(abs_sa(SelfAdjoint(ax)).element(), ax),
                                elem_residual(abs_sa(SelfAdjoint(sq)).element(), sq)));
      // (2) |x| ± x positive
      tally.psd("abs2", std::max(positivity_defect(ax + x.element()), positivity_defect(ax - x.element())));
      // (3) homogeneity
      const double kr = rng.uniform(-3.0, 3.0);
      for (double k : {-2.0, 0.5, 0.0, kr}) {
        const Element lhs = abs_sa(SelfAdjoint(k * x.element())).element();
        tally.eq("abs3", elem_residual(lhs, std::abs(k) * ax));
      }
    }

    const SelfAdjoint& u = triple[0];
    const Element up = pos_part(u), um = neg_part(u);
    const Element ker = complement(support_projection(up));  // everything orthogonal to u+
    const Element b1 = compress(ker, abs_sa(triple[1]));
    const Element b2 = compress(ker, abs_sa(triple[2]));

    // Orthogonal pairs (a, b) with a = u+; every b lives in the kernel of u+.
    for (const Element* b : {&um, &b1}) {
      const double pre = ortho_pos_residual(up, *b);
      tally.eq("orth4", pre);  // existence half of the decomposition
      const Element w = random_dominated(*b, rng);
      tally.psd("abs4", std::max(positivity_defect(w), positivity_defect(*b - w)));
      const double r4 = ortho_pos_residual(up, w);
      tally.eq("abs4", r4);
      tally.eq("orth5", r4);
    }
    // (5): u+ ⊥ b1 and u+ ⊥ b2, so u+ ⊥ |b1 ± b2|
    for (double s : {1.0, -1.0}) {
      const Element mix = abs_sa(SelfAdjoint(b1 + s * b2)).element();
      const double r = ortho_pos_residual(up, mix);
      tally.eq("abs5", r);
      tally.eq("orth6", r);
    }
    {
      const Element w1 = random_dominated(um, rng);
      const Element w2 = random_dominated(um, rng);
      for (double s : {1.0, -1.0}) {
        const Element mix = abs_sa(SelfAdjoint(w1 + s * w2)).element();
        const double r = ortho_pos_residual(up, mix);
        tally.eq("abs5", r);
        tally.eq("orth6", r);
      }
    }

    // Orthogonality relation laws on positives.
    const Element zero = Element::zero(model, n, n);
    for (const auto& x : triple) tally.eq("orth1", ortho_pos_residual(abs_sa(x), zero));
    const Element av = abs_sa(triple[1]);
    const Element aw = abs_sa(triple[2]);
    tally.truth("orth2", ortho_pos(up, b1) == ortho_pos(b1, up));
    tally.truth("orth2", ortho_pos(av, aw) == ortho_pos(aw, av));
    tally.eq("orth2", ortho_pos_residual(b1, up));
    for (double k : {0.25, 3.0}) tally.eq("orth3", ortho_pos_residual(k * up, k * b1));

    // (4): the decomposition is unique; a constructed orthogonal pair is
    // recovered as the positive and negative parts of its difference.
    const auto [a, b] = constructed_split(model, n, rng);
    const SelfAdjoint diff(a - b);
    tally.eq("orth4", ortho_pos_residual(a, b));
    tally.eq("orth4", std::max(elem_residual(pos_part(diff), a), elem_residual(neg_part(diff), b)));
    tally.eq("orth4", elem_residual(up - um, u.element()));
  }
  return tally.finish(sample.size());
}

}  // namespace ordproj
