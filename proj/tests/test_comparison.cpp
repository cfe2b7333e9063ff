#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "ordproj/absolute_order.hpp"
#include "ordproj/comparison.hpp"
#include "ordproj/error.hpp"
#include "ordproj/matrix_order.hpp"

using namespace ordproj;
using namespace testing_helpers;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::PreconditionViolated;
}

Projection cproj(std::initializer_list<double> d) { return Projection(complex_elem(diag(d))); }

// Rank of a projection block read off its trace; independent of any eigensolver.
std::vector<std::size_t> trace_ranks(const Element& p) {
  std::vector<std::size_t> r;
  for (const auto& b : p.blocks()) {
    double t = 0.0;
    for (std::size_t i = 0; i < b.rows(); ++i) t += b(i, i).real();
    r.push_back(static_cast<std::size_t>(std::lround(t)));
  }
  return r;
}

CMat cols(const CMat& q, std::size_t from, std::size_t k) { return q.block(0, from, q.rows(), k); }

CMat proj_of(const CMat& frame) {
  if (frame.cols() == 0) return CMat::zeros(frame.rows(), frame.rows());
  return hermitian_part(frame * frame.adjoint());
}

// Projections in a shared random frame: columns [from, from + k) per block.
Projection frame_projection(const Model& model, std::size_t n, const std::vector<CMat>& frames,
                            const std::vector<std::size_t>& from, const std::vector<std::size_t>& k) {
  return Projection(Element::generate(model, n, n, [&](std::size_t j, std::size_t) {
    return proj_of(cols(frames[j], from[j], k[j]));
  }));
}

std::vector<CMat> random_frames(const Model& model, std::size_t n, Rng& rng) {
  std::vector<CMat> f;
  for (std::size_t d : model.block_dims()) f.push_back(random_unitary(n * d, rng));
  return f;
}

}  // namespace

TEST(Equivalent, DiagonalUnitsGiveMatrixUnit) {
  const auto w = equivalent(cproj({1, 0}), cproj({0, 1}));
  EXPECT_TRUE(mat_eq(abs_rect(w.v.element().adjoint()).block(0), diag({1, 0})));
  EXPECT_TRUE(mat_eq(abs_rect(w.v).block(0), diag({0, 1})));
  // e12 up to a phase
  EXPECT_NEAR(std::abs(w.v.element().block(0)(0, 1)), 1.0, 1e-12);
  EXPECT_NEAR(w.v.element().block(0).frobenius(), 1.0, 1e-12);
}

TEST(Equivalent, ReflexiveWitnessIsP) {
  Rng rng(3);
  const Model model({1, 2});
  const auto p = random_projection(model, 2, {1, 2}, rng);
  const auto w = equivalent(p, p);
  EXPECT_TRUE(elem_eq(w.v, p));
}

TEST(Equivalent, RankMismatchCarriesRanks) {
  try {
    equivalent(cproj({1, 0, 0}), cproj({1, 1, 0}));
    FAIL();
  } catch (const RankError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEquivalent);
    EXPECT_EQ(e.lhs_ranks(), std::vector<std::size_t>{1});
    EXPECT_EQ(e.rhs_ranks(), std::vector<std::size_t>{2});
  }
}

TEST(Equivalent, ModelMismatch) {
  const Projection a(Element::unit(Model({1}), 1));
  const Projection b(Element::unit(Model({2}), 1));
  EXPECT_EQ(kind_of([&] { equivalent(a, b); }), ErrorKind::ModelMismatch);
}

TEST(Equivalent, SucceedsExactlyWhenTraceRanksAgree) {
  Rng rng(11);
  for (const auto& dims : block_sets()) {
    const Model model(dims);
    for (int t = 0; t < 40; ++t) {
      const std::size_t m = 1 + rng.index(3), n = 1 + rng.index(3);
      const auto p = random_projection(model, m, random_ranks(model, m, m, rng), rng);
      const auto q = random_projection(model, n, random_ranks(model, n, n, rng), rng);
      bool ok = true;
      try {
        const auto w = equivalent(p, q);
        EXPECT_LE(w.residual, 1e-9);
        EXPECT_EQ(w.v.element().rows(), m);
        EXPECT_EQ(w.v.element().cols(), n);
      } catch (const RankError&) {
        ok = false;
      }
      EXPECT_EQ(ok, trace_ranks(p) == trace_ranks(q));
    }
  }
}

TEST(Equivalent, FailureStableUnderPerturbation) {
  Rng rng(12);
  const Model model({2});
  const auto p = random_projection(model, 2, {1}, rng);
  const auto q = random_projection(model, 2, {2}, rng);
  Element noisy = q.element();
  noisy += 1e-11 * random_self_adjoint(model, 2, rng);
  const Projection qn(noisy);
  EXPECT_EQ(kind_of([&] { equivalent(p, qn); }), ErrorKind::NotEquivalent);
}

TEST(Equivalent, CertifyRejectsWrongSides) {
  const auto w = equivalent(cproj({1, 0}), cproj({0, 1}));
  EXPECT_EQ(kind_of([&] { certify_equivalence(w.v, cproj({0, 1}), cproj({1, 0})); }),
            ErrorKind::CertificationFailed);
}

TEST(CondH, FullAndZeroCuts) {
  Rng rng(5);
  const Model model({2});
  const auto u = random_partial_isometry(model, 2, 3, {3}, rng);
  EXPECT_TRUE(elem_eq(cond_H_witness(u, u.support()), u));
  EXPECT_TRUE(is_zero(cond_H_witness(u, Projection(Element::zero(model, 3, 3)))));
}

TEST(CondH, RandomSubProjectionOfSupport) {
  Rng rng(6);
  for (const auto& dims : block_sets()) {
    const Model model(dims);
    const std::size_t m = 3, n = 2;
    std::vector<CMat> left, right;
    std::vector<std::size_t> r, k, zero(dims.size(), 0);
    for (std::size_t d : dims) {
      left.push_back(random_unitary(m * d, rng));
      right.push_back(random_unitary(n * d, rng));
      r.push_back(1 + rng.index(n * d));
      k.push_back(rng.index(r.back() + 1));
    }
    const PartialIsometry u(Element::generate(model, m, n, [&](std::size_t j, std::size_t) {
      return cols(left[j], 0, r[j]) * cols(right[j], 0, r[j]).adjoint();
    }));
    const auto p = frame_projection(model, n, right, zero, k);
    const auto u1 = cond_H_witness(u, p);
    EXPECT_TRUE(elem_eq(abs_rect(u1), p));
    EXPECT_TRUE(ortho_rect(u1, u.element() - u1.element()));
    // oracle: u1 = L_k R_k*
    const Element expect = Element::generate(model, m, n, [&](std::size_t j, std::size_t) {
      return k[j] ? cols(left[j], 0, k[j]) * cols(right[j], 0, k[j]).adjoint() : CMat::zeros(m * dims[j], n * dims[j]);
    });
    EXPECT_TRUE(elem_eq(u1, expect));
  }
}

TEST(CondH, NotDominated) {
  const PartialIsometry u(complex_elem(e12()));
  EXPECT_EQ(kind_of([&] { cond_H_witness(u, cproj({1, 0})); }), ErrorKind::NotDominated);
}

TEST(CondT, SameElementGivesRangeProjection) {
  Rng rng(7);
  const Model model({1, 2});
  const auto u = random_partial_isometry(model, 3, 2, {1, 2}, rng);
  const auto w = cond_T_witness(u, u);
  EXPECT_TRUE(elem_eq(w, u.range()));
  EXPECT_TRUE(elem_eq(w.support(), u.range()));
  EXPECT_TRUE(elem_eq(w.range(), u.range()));
}

TEST(CondT, ProjectionWithItself) {
  const auto p = cproj({1, 0, 1});
  const PartialIsometry u(p.element());
  EXPECT_TRUE(elem_eq(cond_T_witness(u, u), p));
}

TEST(CondT, CommonSupportFromOneFrame) {
  Rng rng(8);
  for (const auto& dims : block_sets()) {
    const Model model(dims);
    const std::size_t m = 2, l = 3, n = 2;
    std::vector<CMat> a, b, c;
    std::vector<std::size_t> r;
    for (std::size_t d : dims) {
      a.push_back(random_unitary(m * d, rng));
      b.push_back(random_unitary(l * d, rng));
      c.push_back(random_unitary(n * d, rng));
      r.push_back(rng.index(n * d + 1));
    }
    const PartialIsometry u(Element::generate(model, m, n, [&](std::size_t j, std::size_t) {
      return r[j] ? cols(a[j], 0, r[j]) * cols(c[j], 0, r[j]).adjoint() : CMat::zeros(m * dims[j], n * dims[j]);
    }));
    const PartialIsometry v(Element::generate(model, l, n, [&](std::size_t j, std::size_t) {
      return r[j] ? cols(b[j], 0, r[j]) * cols(c[j], 0, r[j]).adjoint() : CMat::zeros(l * dims[j], n * dims[j]);
    }));
    const auto w = cond_T_witness(u, v);
    EXPECT_EQ(w.element().rows(), l);
    EXPECT_EQ(w.element().cols(), m);
    EXPECT_TRUE(elem_eq(abs_rect(w), abs_rect(u.element().adjoint())));
    EXPECT_TRUE(elem_eq(abs_rect(w.element().adjoint()), abs_rect(v.element().adjoint())));
  }
}

TEST(CondT, SupportMismatch) {
  const PartialIsometry u(complex_elem(e12()));
  const PartialIsometry v(complex_elem(e21()));
  EXPECT_EQ(kind_of([&] { cond_T_witness(u, v); }), ErrorKind::SupportMismatch);
}

TEST(EquivalenceSplit, TrivialCuts) {
  Rng rng(9);
  const Model model({2});
  const auto p = random_projection(model, 2, {2}, rng);
  const auto q = random_projection(model, 3, {2}, rng);
  const auto w = equivalent(p, q);
  const auto full = lemma13_split(w, p);
  EXPECT_TRUE(elem_eq(full.q1, q));
  EXPECT_TRUE(is_zero(full.w2.v));
  const auto none = lemma13_split(w, Projection(Element::zero(model, 2, 2)));
  EXPECT_TRUE(is_zero(none.q1));
  EXPECT_TRUE(elem_eq(none.w2.v, w.v));
}

TEST(EquivalenceSplit, RankOneCutOfRankTwoInM3) {
  Rng rng(10);
  const Model model({1});
  const auto frames = random_frames(model, 3, rng);
  const auto p = frame_projection(model, 3, frames, {0}, {2});
  const auto p1 = frame_projection(model, 3, frames, {1}, {1});
  const auto q = random_projection(model, 3, {2}, rng);
  const auto s = lemma13_split(equivalent(p, q), p1);
  EXPECT_EQ(trace_ranks(s.q1), std::vector<std::size_t>{1});
  EXPECT_TRUE(leq(s.q1, q));
  EXPECT_TRUE(elem_eq(abs_rect(s.w1.v.element().adjoint()), p1));
  EXPECT_TRUE(elem_eq(abs_rect(s.w2.v), q.element() - s.q1.element()));
  EXPECT_TRUE(elem_eq(abs_rect(s.w2.v.element().adjoint()), p.element() - p1.element()));
}

TEST(EquivalenceSplit, NotDominated) {
  const auto w = equivalent(cproj({1, 0}), cproj({0, 1}));
  EXPECT_EQ(kind_of([&] { lemma13_split(w, cproj({0, 1})); }), ErrorKind::NotDominated);
}

TEST(Subequivalent, InsideQ) {
  Rng rng(13);
  const Model model({1, 2});
  const auto frames = random_frames(model, 2, rng);
  const auto p = frame_projection(model, 2, frames, {0, 0}, {1, 2});
  const auto q = frame_projection(model, 2, frames, {0, 0}, {2, 3});
  const auto s = subequivalent(p, q);
  EXPECT_TRUE(leq(s.r, q));
  EXPECT_EQ(trace_ranks(s.r), trace_ranks(p));
  EXPECT_EQ(trace_ranks(s.p0), (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(elem_eq(abs_rect(s.complement.v.element().adjoint()), q));
}

TEST(Subequivalent, SelfGivesP) {
  const auto p = cproj({1, 0, 1});
  const auto s = subequivalent(p, p);
  EXPECT_TRUE(elem_eq(s.r, p));
  EXPECT_TRUE(is_zero(s.p0));
}

TEST(Subequivalent, RankThreeVsOne) {
  try {
    subequivalent(cproj({1, 1, 1}), cproj({1, 0, 0}));
    FAIL();
  } catch (const RankError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSubEquivalent);
    EXPECT_EQ(e.lhs_ranks(), std::vector<std::size_t>{3});
  }
}

TEST(Subequivalent, RoundTripWithComplement) {
  Rng rng(14);
  for (const auto& dims : block_sets()) {
    const Model model(dims);
    for (int t = 0; t < 30; ++t) {
      const std::size_t m = 1 + rng.index(3), n = 1 + rng.index(3);
      const auto p = random_projection(model, m, random_ranks(model, m, m, rng), rng);
      const auto q = random_projection(model, n, random_ranks(model, n, n, rng), rng);
      const auto rp = trace_ranks(p), rq = trace_ranks(q);
      bool oracle = true;
      for (std::size_t j = 0; j < rp.size(); ++j) oracle = oracle && rp[j] <= rq[j];
      try {
        const auto s = subequivalent(p, q);
        EXPECT_TRUE(oracle);
        EXPECT_NO_THROW(equivalent(q, proj_direct_sum(p, s.p0)));
      } catch (const RankError&) {
        EXPECT_FALSE(oracle);
      }
    }
  }
}

TEST(UnitarilyEquivalent, SelfAndSwap) {
  const auto p = cproj({1, 0});
  const auto same = unitarily_equivalent(p, p);
  EXPECT_TRUE(elem_eq(same.u, Element::unit(p.model(), 2)));
  const auto sw = unitarily_equivalent(cproj({1, 0}), cproj({0, 1}));
  const CMat& u = sw.u.block(0);
  EXPECT_NEAR(std::abs(u(0, 1)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(u(1, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(u(0, 0)) + std::abs(u(1, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(sw.v.v.element().block(0)(0, 1)), 1.0, 1e-12);
}

TEST(UnitarilyEquivalent, RankMismatch) {
  EXPECT_EQ(kind_of([&] { unitarily_equivalent(cproj({1, 0}), cproj({1, 1})); }),
            ErrorKind::NotUnitarilyEquivalent);
  EXPECT_EQ(kind_of([&] { unitarily_equivalent(cproj({1, 0}), cproj({1, 0, 0})); }),
            ErrorKind::ShapeError);
}

TEST(UnitarilyEquivalent, RoundTrip) {
  Rng rng(15);
  for (const auto& dims : block_sets()) {
    const Model model(dims);
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 1 + rng.index(3);
      const auto p = random_projection(model, n, random_ranks(model, n, n, rng), rng);
      const auto q = random_projection(model, n, random_ranks(model, n, n, rng), rng);
      const Element e = Element::unit(model, n);
      const bool both = trace_ranks(p) == trace_ranks(q) &&
                        trace_ranks(e - p.element()) == trace_ranks(e - q.element());
      try {
        const auto ue = unitarily_equivalent(p, q);
        EXPECT_TRUE(both);
        EXPECT_TRUE(elem_eq(product(ue.u.adjoint(), ue.u), e));
        EXPECT_TRUE(ortho_rect(ue.v.v, ue.w.v));
      } catch (const RankError&) {
        EXPECT_FALSE(both);
      }
    }
  }
}

TEST(CorU, ChainAndExplicitUnitary) {
  Rng rng(16);
  for (const auto& dims : block_sets()) {
    const Model model(dims);
    for (int t = 0; t < 10; ++t) {
      const std::size_t m = 1 + rng.index(3), n = 1 + rng.index(3);
      const auto p = random_projection(model, m, random_ranks(model, m, m, rng), rng);
      const auto q = random_projection(model, n, random_ranks(model, n, n, rng), rng);
      const auto rep = check_cor_u(p, q);
      EXPECT_TRUE(rep.all_pass()) << rep.failures();
      EXPECT_EQ(rep.find("unitary") != nullptr, trace_ranks(p) == trace_ranks(q));
    }
  }
}

TEST(EquivalenceAlgebra, AllClausesOnSeededProjections) {
  Rng rng(17);
  for (std::size_t n : {2u, 3u}) {
    const Model model({1});
    const auto fp = random_frames(model, n, rng);
    const auto fq = random_frames(model, n, rng);
    const std::size_t k = 1 + rng.index(n - 1);
    const auto p = frame_projection(model, n, fp, {0}, {k});
    const auto pp = frame_projection(model, n, fp, {k}, {n - k});
    const auto q = frame_projection(model, n, fq, {n - k}, {k});
    const auto qp = frame_projection(model, n, fq, {0}, {n - k});
    const auto rep = check_prop15(p, q, pp, qp);
    EXPECT_TRUE(rep.all_pass()) << rep.failures();
    for (const auto& c : rep.clauses) EXPECT_TRUE(c.note.empty()) << c.label << " " << c.note;
  }
}

TEST(EquivalenceAlgebra, ClauseOneWithUnitN) {
  const auto p = cproj({1, 0});
  const Projection q(Element::unit(p.model(), 1));
  EXPECT_TRUE(check_prop15_clause(1, p, q, p, q).all_pass());
}

TEST(EquivalenceAlgebra, AssociativityIsExact) {
  const auto rep = check_prop15_clause(6, cproj({1, 0}), cproj({1}), cproj({0, 1, 1}), cproj({1}));
  EXPECT_TRUE(rep.all_pass());
}

TEST(EquivalenceAlgebra, PreconditionViolated) {
  const auto p = cproj({1, 0});
  EXPECT_EQ(kind_of([&] { check_prop15_clause(2, p, p, p, p); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([&] { check_prop15_clause(3, p, cproj({1, 1}), p, p); }), ErrorKind::PreconditionViolated);
  const auto rep = check_prop15(p, p, p, p);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(rep.find("(2)")->note, "skipped");
}

TEST(Preorder, FiveSeededProjections) {
  Rng rng(18);
  const Model model({1, 2});
  std::vector<Projection> ps;
  for (int i = 0; i < 5; ++i) {
    const std::size_t n = 1 + rng.index(2);
    ps.push_back(random_projection(model, n, {rng.index(2), rng.index(3)}, rng));
  }
  const auto rep = check_preorder(ps);
  EXPECT_TRUE(rep.all_pass()) << rep.failures();
  EXPECT_NE(rep.find("transitive-sub")->note, "0 checked");
}

TEST(Preorder, Singleton) {
  const auto rep = check_preorder({cproj({1, 0})});
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(rep.find("reflexive")->note, "1 checked");
}

TEST(Preorder, EqualRankPairIsSymmetric) {
  Rng rng(19);
  const Model model({2});
  const auto rep = check_preorder({random_projection(model, 2, {2}, rng), random_projection(model, 3, {2}, rng)});
  EXPECT_TRUE(rep.all_pass()) << rep.failures();
  EXPECT_EQ(rep.find("symmetric")->note, "4 checked");
}

TEST(ScalarConj, IdentityPermutationAndRandom) {
  Rng rng(20);
  const Model model({1, 2});
  const auto p = random_projection(model, 3, {1, 3}, rng);
  const CMat perm = CMat::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  for (const CMat& d : {CMat::identity(3), perm, random_unitary(3, rng)}) {
    const auto rep = scalar_unitary_conj_equiv(p, d, random_isometry(4, 3, rng));
    EXPECT_TRUE(rep.all_pass()) << rep.failures();
    EXPECT_NE(rep.find("isometry"), nullptr);
  }
}

TEST(ScalarConj, RejectsNonUnitary) {
  const auto p = cproj({1, 0});
  EXPECT_EQ(kind_of([&] { scalar_unitary_conj_equiv(p, diag({1, 2})); }), ErrorKind::NotUnitary);
  EXPECT_EQ(kind_of([&] { scalar_unitary_conj_equiv(p, CMat::identity(2), diag({1, 2})); }),
            ErrorKind::NotIsometry);
}

TEST(SubequivalenceDirectSum, DirectSumOfSubequivalences) {
  Rng rng(25);
  const Model model({1, 2});
  const auto p = random_projection(model, 2, {1, 1}, rng);
  const auto r = random_projection(model, 3, {2, 3}, rng);
  const auto q = random_projection(model, 1, {0, 2}, rng);
  const auto s = random_projection(model, 2, {1, 2}, rng);
  const auto rep = check_prop16_oplus(p, q, r, s);
  EXPECT_TRUE(rep.all_pass()) << rep.failures();
  EXPECT_EQ(kind_of([&] { check_prop16_oplus(r, q, p, s); }), ErrorKind::PreconditionViolated);
}
