#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ordproj/absolute_order.hpp"
#include "ordproj/error.hpp"
#include "ordproj/matrix_order.hpp"
#include "ordproj/proj_isometry.hpp"

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

CMat permutation3() { return CMat::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}); }

}  // namespace

TEST(Classify, MatrixUnitIsOnlyPartialIsometry) {
  const auto c = classify(complex_elem(e12()));
  ASSERT_EQ(c.labels.size(), 1u);
  EXPECT_EQ(c.labels[0].name, "partial-isometry");
}

TEST(Classify, PauliX) {
  const auto c = classify(complex_elem(CMat::from_rows({{0, 1}, {1, 0}})));
  for (const char* l : {"normal", "unitary", "symmetry", "partial-unitary", "partial-symmetry",
                        "partial-isometry", "isometry", "co-isometry"})
    EXPECT_TRUE(c.has(l)) << l;
  EXPECT_FALSE(c.has("order-projection"));
}

TEST(Classify, Unit) {
  const auto c = classify(Element::unit(Model({1, 2}), 2));
  EXPECT_EQ(c.labels.size(), 9u);
}

TEST(Classify, RectangularIsometry) {
  Rng rng(1);
  const Element v = complex_elem(random_isometry(3, 2, rng));
  const auto c = classify(v);
  EXPECT_TRUE(c.has("isometry"));
  EXPECT_FALSE(c.has("co-isometry"));
  EXPECT_FALSE(c.has("normal"));  // not square, so never considered
}

TEST(Classify, OrderProjectionMatchesSpectrum) {
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    const Model m(block_sets()[t % 3]);
    const Projection p = random_projection(m, 2, random_ranks(m, 2, 2, rng), rng);
    EXPECT_TRUE(classify(p).has("order-projection"));
    for (const auto& b : p.element().blocks())
      for (double x : herm_eig(b).values) EXPECT_LE(std::min(std::abs(x), std::abs(x - 1.0)), 1e-8);
  }
}

TEST(OrderProjection, Examples) {
  EXPECT_NO_THROW(is_order_projection(SelfAdjoint(complex_elem(diag({1, 0})))));
  EXPECT_EQ(kind_of([] { is_order_projection(SelfAdjoint(complex_elem(diag({0.5, 0.5})))); }),
            ErrorKind::NotProjection);
  try {
    is_order_projection(SelfAdjoint(complex_elem(diag({0.5, 0.5}))));
  } catch (const Error& e) {
    // |2p - e| = 0, so the residual is ||I||_F / max(1, ||I||_F) = 1
    EXPECT_NEAR(e.residual(), 1.0, 1e-12);
  }
}

TEST(OrderProjection, SpectralProjectionOfRandomHermitian) {
  Rng rng(3);
  const CMat h = random_hermitian(4, rng);
  const CMat b = eigenspace_above(h, 0.0);
  const Element p = scalar_elem(hermitian_part(b * b.adjoint()));
  EXPECT_LE(is_order_projection(SelfAdjoint(p)).residual(), 1e-9);
}

TEST(PsDecompose, Examples) {
  auto [p, m] = ps_decompose(complex_elem(diag({1, -1})));
  EXPECT_TRUE(elem_eq(p, complex_elem(diag({1, 0}))));
  EXPECT_TRUE(elem_eq(m, complex_elem(diag({0, 1}))));

  auto [p2, m2] = ps_decompose(complex_elem(diag({1, 0})));
  EXPECT_TRUE(is_zero(m2));

  Rng rng(4);
  const CMat u = random_unitary(3, rng);
  const Element v = complex_elem(hermitian_part(u.adjoint() * diag({1, -1, 0}) * u));
  auto [p3, m3] = ps_decompose(v);
  EXPECT_LE(std::max(p3.residual(), m3.residual()), 1e-9);
  EXPECT_TRUE(ortho_pos(p3, m3));
  EXPECT_LE(elem_residual(p3.element() - m3.element(), v), 1e-9);

  EXPECT_EQ(kind_of([] { ps_decompose(complex_elem(diag({1, 0.5}))); }), ErrorKind::NotPartialSymmetry);
}

TEST(PiSum, MatrixUnitsFormUnitary) {
  const PartialIsometry a(complex_elem(e12()));
  const PartialIsometry b(complex_elem(e21()));
  const PartialIsometry s = pi_orthogonal_sum({a, b});
  EXPECT_TRUE(classify(s).has("unitary"));
  EXPECT_TRUE(elem_eq(pi_orthogonal_sum({a}), a));
  EXPECT_EQ(kind_of([&] { pi_orthogonal_sum({a, a}); }), ErrorKind::NotOrthogonal);
}

TEST(PiSum, PermutationFromMatrixUnits) {
  std::vector<PartialIsometry> units;
  const CMat p = permutation3();
  for (std::size_t i = 0; i < 3; ++i) {
    CMat u(3, 3);
    for (std::size_t j = 0; j < 3; ++j) u(i, j) = p(i, j);
    units.emplace_back(complex_elem(u));
  }
  const PartialIsometry s = pi_orthogonal_sum(units);
  EXPECT_TRUE(elem_eq(s, complex_elem(p)));
}

TEST(DirectSum, RoundTrip) {
  Rng rng(5);
  const Model m({1, 2});
  const Projection e(Element::unit(m, 1));
  const Projection z(Element::zero(m, 1, 1));
  EXPECT_TRUE(elem_eq(proj_direct_sum(e, z), oplus(e, z)));
  const Projection p = random_projection(m, 2, {1, 2}, rng);
  const Projection q = random_projection(m, 1, {0, 1}, rng);
  const auto [a, b] = proj_split(proj_direct_sum(p, q), 2);
  EXPECT_TRUE(elem_eq(a, p));
  EXPECT_TRUE(elem_eq(b, q));
  EXPECT_EQ(kind_of([&] { proj_direct_sum(p, Projection(Element::unit(Model({3}), 1))); }),
            ErrorKind::ModelMismatch);
}

TEST(UnitaryConjugationAbs, Examples) {
  Rng rng(6);
  const Model m({2});
  const Element v = random_element(m, 3, 3, rng);
  EXPECT_TRUE(unitary_conj_abs(CMat::identity(3), v).all_pass());
  EXPECT_TRUE(unitary_conj_abs(permutation3(), v).all_pass());
  EXPECT_TRUE(unitary_conj_abs(random_unitary(3, rng), v).all_pass());
  // permuted diagonal: |α* d α| is the permuted |d|
  const Element d = complex_elem(diag({1, -2, 3}));
  const CMat a = permutation3();
  EXPECT_TRUE(elem_eq(abs_rect(scalar_act(a.adjoint(), d, a)), scalar_act(a.adjoint(), complex_elem(diag({1, 2, 3})), a)));
  EXPECT_EQ(kind_of([&] { unitary_conj_abs(2.0 * CMat::identity(3), v); }), ErrorKind::NotUnitary);
}

TEST(IsometryConj, Examples) {
  Rng rng(7);
  const Model m({1, 2});
  const Projection p = random_projection(m, 2, {1, 2}, rng);
  CMat top(3, 2);
  top(0, 0) = 1.0;
  top(1, 1) = 1.0;
  EXPECT_TRUE(elem_eq(isometry_conj_proj(top, p), oplus(p, Element::zero(m, 1, 1))));
  EXPECT_TRUE(elem_eq(isometry_conj_proj(CMat::identity(2), p), p));
  EXPECT_LE(isometry_conj_proj(random_isometry(4, 2, rng), p).residual(), 1e-9);
  EXPECT_EQ(kind_of([&] { isometry_conj_proj(2.0 * top, p); }), ErrorKind::NotIsometry);

  const auto [u, v] = disjoint_positive_pair(m, 2, rng);
  EXPECT_TRUE(isometry_conj_ortho(random_isometry(3, 2, rng), u, v).all_pass());
}

TEST(CompletePartialUnitary, Examples) {
  Rng rng(8);
  const Element u = complex_elem(random_unitary(3, rng));
  EXPECT_TRUE(elem_eq(complete_partial_unitary(u), u));
  EXPECT_TRUE(elem_eq(complete_partial_unitary(complex_elem(CMat(2, 2))), Element::unit(Model({1}), 2)));
  // unitary on a 2-dim subspace, zero on its complement
  const CMat q = random_unitary(3, rng);
  CMat w(3, 3);
  w.set_block(0, 0, random_unitary(2, rng));
  const Element v = complex_elem(q * w * q.adjoint());
  const Element c = complete_partial_unitary(v);
  EXPECT_TRUE(classify(c).has("unitary"));
  EXPECT_EQ(kind_of([] { complete_partial_unitary(complex_elem(e12())); }), ErrorKind::NotPartialUnitary);
}

TEST(Generators, Examples) {
  const Model m({2});
  EXPECT_TRUE(is_zero(random_projection(m, 2, {0}, 1)));
  EXPECT_TRUE(elem_eq(random_projection(m, 2, {4}, 1), Element::unit(m, 2)));
  const Projection p = random_projection(Model({4}), 1, {2}, 5);
  EXPECT_LE(p.residual(), 1e-9);
  EXPECT_EQ(projection_ranks(p), std::vector<std::size_t>{2});
  EXPECT_EQ(kind_of([&] { random_projection(m, 1, {3}, 1); }), ErrorKind::RankOutOfRange);
  const PartialIsometry v = random_partial_isometry(Model({1, 2}), 3, 2, {2, 3}, 9);
  EXPECT_EQ(projection_ranks(v.support()), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(projection_ranks(v.range()), (std::vector<std::size_t>{2, 3}));
}

TEST(ProjectionOrthogonality, FourWayEquivalence) {
  Rng rng(10);
  const Model m({3});
  for (int t = 0; t < 10; ++t) {
    const Projection p = random_projection(m, 1, {1}, rng);
    const Projection q = random_projection(m, 1, {1 + static_cast<std::size_t>(t % 2)}, rng);
    EXPECT_TRUE(check_remark7_2(p, q).all_pass());
  }
  const Projection a(complex_elem(diag({1, 0, 0})));
  const Projection b(complex_elem(diag({0, 1, 1})));
  const auto r = check_remark7_2(a, b);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.clauses[0].note, "orthogonal");
}

TEST(ProjectionOrthogonality, SubProjections) {
  EXPECT_TRUE(check_remark7_3(complex_elem(diag({1, 0})), complex_elem(diag({0, 1}))).all_pass());
  const auto r = check_remark7_3(complex_elem(diag({0.3, 0})), complex_elem(diag({0.7, 0})));
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.clauses[0].note, "premises fail");
}

TEST(PartialIsometrySuspensions, Suspensions) {
  Rng rng(11);
  const Model m({1, 2});
  const PartialIsometry v = random_partial_isometry(m, 2, 3, {1, 2}, rng);
  auto r = check_remark8(v);
  EXPECT_TRUE(r.all_pass()) << r.failures();
  EXPECT_EQ(r.clauses[0].note, "partial isometry");
  r = check_remark8(0.5 * v.element());
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.clauses[0].note, "not a partial isometry");
}

TEST(PartialSymmetryParts, PartialSymmetriesAndIsometries) {
  Rng rng(12);
  const CMat u = random_unitary(3, rng);
  EXPECT_TRUE(check_prop9(complex_elem(hermitian_part(u.adjoint() * diag({1, -1, 0}) * u))).all_pass());
  EXPECT_TRUE(check_prop9(complex_elem(diag({1, -0.5, 0}))).all_pass());
  EXPECT_TRUE(check_prop9(random_partial_isometry(Model({2}), 1, 2, {2}, rng)).all_pass());
  EXPECT_TRUE(check_prop9(random_element(Model({2}), 2, 1, rng)).all_pass());
}

TEST(Cor10, OrthogonalFamilies) {
  const std::vector<Element> units = {complex_elem(e12()), complex_elem(e21())};
  EXPECT_TRUE(check_cor10(units).all_pass());
  const std::vector<Element> scaled = {complex_elem(e12()), 0.5 * complex_elem(e21())};
  const auto r = check_cor10(scaled);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.clauses[0].note, "not all partial isometries");
  EXPECT_EQ(kind_of([] { check_cor10({complex_elem(e12()), complex_elem(e12())}); }),
            ErrorKind::PreconditionViolated);
}

TEST(ProjectionDirectSums, DirectSums) {
  Rng rng(13);
  const Model m({2});
  const Projection p = random_projection(m, 2, {1}, rng);
  const Projection q = random_projection(m, 1, {2}, rng);
  EXPECT_TRUE(check_prop11(p, q).all_pass());
  EXPECT_TRUE(check_prop11(0.5 * p.element(), q).all_pass());
}
