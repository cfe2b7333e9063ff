#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ordproj/absolute_order.hpp"
#include "ordproj/cardinal.hpp"
#include "ordproj/error.hpp"
#include "ordproj/finiteness.hpp"
#include "ordproj/matrix_order.hpp"
#include "ordproj/proj_isometry.hpp"
#include "ordproj/random.hpp"
#include "ordproj/suite.hpp"

using namespace ordproj;

namespace {

constexpr double kAxiomResidual = 1e-8;
constexpr double kNormGap = 1e-8;
constexpr double kIdentityResidual = 1e-8;
constexpr double kUnitaryResidual = 1e-9;
constexpr double kAxiomSeconds = 10.0;
constexpr double kCardinalSeconds = 1.0;

const std::vector<std::size_t> kDims{1, 2, 3};
const std::vector<std::vector<std::size_t>> kBlocks{{2}, {3}, {1, 2}};

struct Layout {
  Model model;
  std::size_t n;
};

Layout layout(std::size_t i) {
  return {Model(kBlocks[(i / kDims.size()) % kBlocks.size()]), kDims[i % kDims.size()]};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void line(int id, bool pass, const std::string& text) {
  std::printf("criterion %2d %s: %s\n", id, pass ? "PASS" : "FAIL", text.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Spectral data in one random frame per block: each eigen-index belongs to
// u, to v or to neither, so u ⊥ v holds by construction.
std::pair<Element, Element> orthogonal_pair(const Model& model, std::size_t n, Rng& rng, bool signed_values) {
  std::vector<CMat> a, b;
  for (std::size_t d : model.block_dims()) {
    const std::size_t dim = n * d;
    const CMat q = random_unitary(dim, rng);
    std::vector<double> x(dim, 0.0), y(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      double val = rng.uniform(0.2, 2.0);
      if (signed_values && rng.coin()) val = -val;
      const std::size_t owner = i < 2 ? i : rng.index(3);
      if (owner == 0) x[i] = val;
      if (owner == 1) y[i] = val;
    }
    a.push_back(hermitian_part(q * CMat::diagonal(x) * q.adjoint()));
    b.push_back(hermitian_part(q * CMat::diagonal(y) * q.adjoint()));
  }
  return {Element(model, n, n, a), Element(model, n, n, b)};
}

// Blockwise u v = 0, decided on the raw blocks.
bool products_vanish(const Element& u, const Element& v) {
  for (std::size_t j = 0; j < u.blocks().size(); ++j)
    if ((u.block(j) * v.block(j)).frobenius() > 1e-9 * std::max(1.0, u.block(j).frobenius() * v.block(j).frobenius()))
      return false;
  return true;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t failed = 0, triples = 0;
  double worst = 0.0;
  for (std::size_t combo = 0; combo < kDims.size() * kBlocks.size(); ++combo) {
    const Layout l = layout(combo);
    Rng rng(derive_seed(1, combo));
    std::vector<SaTriple> sample;
    for (int i = 0; i < 200; ++i) {
      sample.push_back({SelfAdjoint(random_self_adjoint(l.model, l.n, rng)),
                        SelfAdjoint(random_self_adjoint(l.model, l.n, rng)),
                        SelfAdjoint(random_self_adjoint(l.model, l.n, rng))});
    }
    const AxiomReport r = check_abs_axioms(l.model, sample, derive_seed(2, combo));
    triples += r.triples;
    for (const auto& t : r.axioms) failed += t.failed;
    worst = std::max(worst, r.worst_residual());
  }
  const double dt = seconds_since(t0);
  line(1, failed == 0 && worst <= kAxiomResidual && dt < kAxiomSeconds && triples == 1800,
       std::to_string(triples) + " triples, " + std::to_string(failed) + " axiom failures, worst residual " +
           num(worst) + " (<= " + num(kAxiomResidual) + "), " + num(dt) + " s (< " + num(kAxiomSeconds) + " s)");
}

void criterion2() {
  std::size_t discrepancies = 0, constructed_missed = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    const Layout l = layout(i);
    Rng rng(derive_seed(3, i));
    const bool constructed = i % 2 == 0;
    Element u = random_self_adjoint(l.model, l.n, rng), v = random_self_adjoint(l.model, l.n, rng);
    if (constructed) std::tie(u, v) = orthogonal_pair(l.model, l.n, rng, true);
    try {
      const Prop1Result r = check_prop1(SelfAdjoint(u), SelfAdjoint(v));
      if (!r.consistent) ++discrepancies;
      if (r.orthogonal != products_vanish(u, v)) ++discrepancies;
      if (constructed && !r.orthogonal) ++constructed_missed;
    } catch (const Error&) {
      ++discrepancies;
    }
  }
  line(2, discrepancies == 0 && constructed_missed == 0,
       "500 pairs, " + std::to_string(discrepancies) + " discrepancies, " + std::to_string(constructed_missed) +
           " constructed orthogonal pairs missed");
}

void criterion3() {
  std::size_t disagreements = 0, plain_differs = 0, orthogonal = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    const Layout l = layout(i);
    Rng rng(derive_seed(4, i));
    Element u = random_positive(l.model, l.n, rng), v = random_positive(l.model, l.n, rng);
    if (i % 2 == 0) std::tie(u, v) = orthogonal_pair(l.model, l.n, rng, false);
    const bool pos = ortho_pos(u, v);
    const bool alg = ortho_alg(u, v);
    const bool inf = ortho_inf_hereditary(u, v);
    if (pos != alg || pos != inf || pos != products_vanish(u, v)) ++disagreements;
    if (ortho_inf(u, v) != pos) ++plain_differs;
    orthogonal += pos ? 1 : 0;
  }
  line(3, disagreements == 0,
       "500 nonzero PSD pairs (" + std::to_string(orthogonal) + " orthogonal), " + std::to_string(disagreements) +
           " disagreements among order, algebraic and hereditary norm orthogonality; plain norm test differs on " +
           std::to_string(plain_differs));
}

void criterion4() {
  std::size_t failed = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 300; ++i) {
    const Layout l = layout(i);
    Rng rng(derive_seed(5, i));
    const std::size_t m = 1 + rng.index(3);
    const Element v = rng.uniform(0.1, 4.0) * random_element(l.model, m, l.n, rng);
    const double gap = std::abs(order_unit_norm(v) - spectral_norm(v));
    const CheckReport r = check_norm_prop(v);
    worst = std::max({worst, gap, r.worst_residual()});
    if (gap > kNormGap || !r.all_pass()) ++failed;
  }
  line(4, failed == 0, "300 elements incl. rectangular, " + std::to_string(failed) + " failures, worst gap " +
                           num(worst) + " (<= " + num(kNormGap) + ")");
}

void criterion5() {
  std::size_t failed = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 300; ++i) {
    const Layout l = layout(i);
    Rng rng(derive_seed(6, i));
    const std::size_t m = 1 + rng.index(3);
    const Element v = random_element(l.model, m, l.n, rng);
    CheckReport r = check_remark3(v, random_isometry(m + rng.index(2), m, rng));
    const auto [u1, u2] = orthogonal_pair(l.model, l.n, rng, false);
    const auto [v1, v2] = orthogonal_pair(l.model, m, rng, false);
    r.merge(check_remark4_sum(u1, v1, u2, v2));
    r.merge(check_remark4_sum(u1, random_positive(l.model, m, rng), random_positive(l.model, l.n, rng), v2), "g");
    r.merge(check_remark4_rect(random_element(l.model, m, l.n, rng), random_element(l.model, m, l.n, rng)));
    r.merge(check_remark4_rect(random_element(l.model, m, l.n, rng), Element::zero(l.model, m, l.n)), "z");
    worst = std::max(worst, r.worst_residual());
    if (!r.all_pass() || r.worst_residual() > kIdentityResidual) ++failed;
  }
  line(5, failed == 0, "300 elements, " + std::to_string(failed) + " failures, worst residual " + num(worst) +
                           " (<= " + num(kIdentityResidual) + ")");
}

std::size_t suite_failures(const std::vector<std::string>& ids, std::uint64_t seed, std::string& detail) {
  std::size_t failed = 0;
  for (const auto& id : ids) {
    SuiteOptions o;
    o.id = id;
    o.seed = seed;
    o.cases = 200;
    const SuiteReport r = run_suite(o);
    failed += r.failures.size();
    detail += (detail.empty() ? "" : ", ") + id + " " + std::to_string(r.passed) + "/200";
  }
  return failed;
}

void criterion6() {
  std::string detail;
  const std::size_t failed =
      suite_failures({"remark7", "prop9", "cor10", "prop11", "lemma12", "conj"}, 6, detail);
  line(6, failed == 0, detail);
}

void criterion7() {
  std::string detail;
  const std::size_t failed = suite_failures(
      {"H", "T", "lemma13", "prop15", "prop14", "prop16", "prop17", "prop18"}, 7, detail);
  line(7, failed == 0, detail);
}

void criterion8() {
  std::size_t iso_failed = 0, finite_failed = 0, candidates = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t i = 0; i < 200; ++i) {
      const Model model(kBlocks[i % kBlocks.size()]);
      Rng rng(derive_seed(8 * n, i));
      const Element v = random_square_isometry(model, n, rng);
      const Element e = Element::unit(model, n);
      const double defect = std::max(elem_residual(product(v.adjoint(), v), e), elem_residual(product(v, v.adjoint()), e));
      try {
        if (!verify_isometry_unitary(v).all_pass() || defect > kUnitaryResidual) ++iso_failed;
      } catch (const Error&) {
        ++iso_failed;
      }
      if (i % 4 != 0) continue;
      const Projection p = random_projection(model, n, random_ranks(model, n, n, rng), rng);
      const CheckReport f = is_finite_matrix(p, 50, rng.next());
      candidates += 50;
      if (!f.all_pass()) ++finite_failed;
    }
  }
  line(8, iso_failed == 0 && finite_failed == 0,
       "800 isometries over n = 1..4, " + std::to_string(iso_failed) + " not unitary; 200 projections, " +
           std::to_string(candidates) + " equal-rank candidates, " + std::to_string(finite_failed) +
           " projections with q != p");
}

void criterion9() {
  const auto t0 = std::chrono::steady_clock::now();
  const CheckReport r = card_check_section5(card_default_grid(), 6);
  const double dt = seconds_since(t0);
  std::size_t failed = 0;
  for (const auto& c : r.clauses) failed += c.pass ? 0 : 1;
  line(9, r.all_pass() && r.worst_residual() == 0.0 && dt < kCardinalSeconds,
       std::to_string(r.clauses.size()) + " clauses on ranks {0..5, ω}, " + std::to_string(failed) + " failing, " +
           num(dt) + " s (< " + num(kCardinalSeconds) + " s)");
}

void criterion10() {
  SuiteOptions o;
  o.id = "prop15";
  o.seed = 7;
  o.cases = 100;
  const SuiteReport serial = run_suite(o);
  const SuiteReport again = run_suite(o);
  o.threads = 4;
  const SuiteReport parallel = run_suite(o);
  const std::string a = serial.to_json(false).dump();
  const bool same = a == again.to_json(false).dump() && a == parallel.to_json(false).dump();
  line(10, same && serial.ok(), std::string("prop15 seed 7, 100 cases: serial, repeated and 4-thread reports ") +
                                    (same ? "identical" : "differ") + ", " + std::to_string(serial.passed) +
                                    "/100 passed");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      line(static_cast<int>(i + 1), false, std::string("unexpected error: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
