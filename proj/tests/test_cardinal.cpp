#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ordproj/cardinal.hpp"
#include "ordproj/comparison.hpp"
#include "ordproj/error.hpp"

using namespace ordproj;
using namespace testing_helpers;

namespace {

const ExtNat w = ExtNat::omega();
ExtNat f(std::uint64_t k) { return ExtNat::fin(k); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::PreconditionViolated;
}

}  // namespace

TEST(ExtNat, ArithmeticAndOrder) {
  EXPECT_EQ(f(2) + f(3), f(5));
  EXPECT_EQ(f(2) + w, w);
  EXPECT_EQ(w + w, w);
  EXPECT_TRUE(f(7) < w);
  EXPECT_TRUE(w <= w);
  EXPECT_FALSE(w <= f(100));
  EXPECT_TRUE(f(1) <= f(2));
  EXPECT_EQ(w.str(), "ω");
  EXPECT_EQ(kind_of([] { (void)w.value(); }), ErrorKind::PreconditionViolated);
}

TEST(CardEquiv, Examples) {
  EXPECT_TRUE(card_equiv({f(2), w}, {f(2), w}));
  EXPECT_TRUE(card_equiv({w, f(0)}, {w, f(1)}));
  EXPECT_FALSE(card_equiv({f(1), w}, {f(2), w}));
  EXPECT_EQ(kind_of([] { card_equiv({f(1), f(1)}, {f(1), f(2)}); }), ErrorKind::AmbientMismatch);
}

TEST(CardSubequiv, Examples) {
  EXPECT_TRUE(card_subequiv({f(1), w}, {w, f(0)}));
  EXPECT_FALSE(card_subequiv({w, f(0)}, {f(3), w}));
  EXPECT_EQ(kind_of([] { card_subequiv({f(1), f(1)}, {f(1), w}); }), ErrorKind::AmbientMismatch);
}

TEST(CardOplus, Examples) {
  EXPECT_EQ(card_oplus({f(1), f(1)}, {f(2), f(0)}), (CardProj{f(3), f(1)}));
  EXPECT_EQ(card_oplus({f(1), f(2)}, {f(0), f(4)}), (CardProj{f(1), f(6)}));
  EXPECT_EQ(card_oplus({w, f(1)}, {f(2), f(0)}), (CardProj{w, f(1)}));
}

TEST(CardInfinite, ShiftWitness) {
  const auto v = card_is_infinite({w, f(0)});
  ASSERT_TRUE(v.infinite);
  EXPECT_EQ(v.witness->sub, (CardProj{w, f(1)}));
  EXPECT_EQ(v.witness->gap, f(1));
  EXPECT_TRUE(card_is_sub({w, f(0)}, *v.witness));
  EXPECT_FALSE(card_is_infinite({f(4), w}).infinite);
  EXPECT_FALSE(card_is_infinite({f(0), w}).infinite);
}

TEST(CardProperlyInfinite, Examples) {
  EXPECT_TRUE(card_is_properly_infinite({w, f(0)}));
  EXPECT_FALSE(card_is_properly_infinite({f(3), w}));
  EXPECT_FALSE(card_is_properly_infinite({f(3), f(2)}));
  EXPECT_EQ(kind_of([] { card_is_properly_infinite({f(0), w}); }), ErrorKind::ZeroProjection);
}

TEST(CardSequence, CoranksIncrease) {
  const auto s = card_decreasing_sequence({w, f(0)}, 4);
  ASSERT_EQ(s.size(), 4u);
  for (std::uint64_t n = 0; n < 4; ++n) {
    EXPECT_EQ(s[n].rank, w);
    EXPECT_EQ(s[n].corank, f(n));
    EXPECT_TRUE(card_equiv(s[n], s[0]));
  }
  const auto one = card_decreasing_sequence({w, w}, 1);
  EXPECT_EQ(one, (std::vector<CardProj>{{w, w}}));
  EXPECT_EQ(kind_of([] { card_decreasing_sequence({f(2), w}, 3); }), ErrorKind::NotInfinite);
}

TEST(CardGrid, DefaultGridPassesEverything) {
  const auto rep = card_check_section5(card_default_grid());
  EXPECT_TRUE(rep.all_pass()) << rep.failures();
  EXPECT_EQ(card_grid_projections(card_default_grid()).size(), 13u);
  for (const auto& c : rep.clauses) EXPECT_NE(c.note.rfind("0 cases", 0), 0u) << c.label;
}

TEST(CardGrid, DegenerateGrids) {
  const auto zero = card_check_section5({f(0)});
  EXPECT_TRUE(zero.all_pass());
  EXPECT_TRUE(card_grid_projections({f(0)}).empty());
  const auto omega = card_check_section5({w});
  EXPECT_TRUE(omega.all_pass()) << omega.failures();
  EXPECT_EQ(card_grid_projections({w}).size(), 1u);
}

TEST(CardGrid, GridOracleForInfiniteness) {
  // p infinite iff some proper cut with positive gap keeps rank; enumerate by hand
  for (const auto& p : card_grid_projections(card_default_grid())) {
    bool found = false;
    for (std::uint64_t g = 1; g <= 5; ++g)
      if (p.rank.is_omega()) found = found || card_is_sub(p, {{w, p.corank + f(g)}, f(g)});
    EXPECT_EQ(found, card_is_infinite(p).infinite) << p.str();
  }
}

TEST(CardGrid, AgreesWithMatrixModelOnFiniteRanks) {
  Rng rng(24);
  const Model model({1});
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.index(4);
    const std::size_t a = rng.index(n + 1), b = rng.index(n + 1);
    const auto p = random_projection(model, n, {a}, rng);
    const auto q = random_projection(model, n, {b}, rng);
    const CardProj cp{f(a), f(n - a)}, cq{f(b), f(n - b)};
    bool eq = true, sub = true;
    try {
      equivalent(p, q);
    } catch (const RankError&) {
      eq = false;
    }
    try {
      subequivalent(p, q);
    } catch (const RankError&) {
      sub = false;
    }
    EXPECT_EQ(eq, card_equiv(cp, cq));
    EXPECT_EQ(sub, card_subequiv(cp, cq));
  }
}
