#include "ordproj/cardinal.hpp"

#include <functional>

#include "ordproj/error.hpp"

namespace ordproj {

namespace {

const ExtNat kZero = ExtNat::fin(0);
const ExtNat kOne = ExtNat::fin(1);

void require_ambient(const CardProj& p, const CardProj& q, const char* op) {
  if (p.ambient() != q.ambient())
    throw Error(ErrorKind::AmbientMismatch,
                std::string(op) + ": ambients " + p.ambient().str() + " and " + q.ambient().str());
}

// p ⊕ 0 on ℓ², the embedding that makes every ambient infinite.
CardProj lift(const CardProj& p) { return {p.rank, p.corank + ExtNat::omega()}; }

// Tally of one exhaustive clause.
struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what());
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  void report(CheckReport& rep, const std::string& label) const {
    std::string note = std::to_string(cases) + " cases";
    for (const auto& f : failures) note += "; " + f;
    rep.add(label, failures.empty(), 0.0, note);
  }
};

std::string pair_str(const CardProj& a, const CardProj& b) { return a.str() + " " + b.str(); }

}  // namespace

std::uint64_t ExtNat::value() const {
  if (omega_) throw Error(ErrorKind::PreconditionViolated, "ω has no finite value");
  return k_;
}

std::string ExtNat::str() const { return omega_ ? "ω" : std::to_string(k_); }

std::string CardProj::str() const { return "(" + rank.str() + "," + corank.str() + ")"; }

bool card_is_sub(const CardProj& p, const CardSub& s) {
  return s.sub.rank + s.gap == p.rank && s.sub.corank == p.corank + s.gap;
}

std::optional<CardProj> card_orthogonal_sum(const CardProj& p, const CardProj& q, const ExtNat& corank) {
  if (p.ambient() != q.ambient()) return std::nullopt;
  if (q.rank + corank != p.corank || p.rank + corank != q.corank) return std::nullopt;
  return CardProj{p.rank + q.rank, corank};
}

bool card_equiv(const CardProj& p, const CardProj& q) {
  require_ambient(p, q, "card_equiv");
  return p.rank == q.rank;
}

bool card_subequiv(const CardProj& p, const CardProj& q) {
  require_ambient(p, q, "card_subequiv");
  return p.rank <= q.rank;
}

CardProj card_oplus(const CardProj& p, const CardProj& q) { return {p.rank + q.rank, p.corank + q.corank}; }

InfiniteVerdict card_is_infinite(const CardProj& p) {
  if (!p.rank.is_omega()) return {};
  // shift: drop one dimension from the range
  CardSub w{{ExtNat::omega(), p.corank + kOne}, kOne};
  if (!card_is_sub(p, w) || !card_equiv(w.sub, p))
    throw Error(ErrorKind::CertificationFailed, "shift witness of " + p.str() + " fails");
  return {true, w};
}

bool card_is_properly_infinite(const CardProj& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroProjection, "properly infinite needs p ≠ 0");
  // r = s ~ p with r + s <= p; the remainder may be taken zero
  const bool by_definition = p.rank + p.rank == p.rank;
  const CardProj l = lift(p);
  const bool by_criterion = card_subequiv(card_oplus(l, l), l);
  if (by_definition != by_criterion)
    throw Error(ErrorKind::CertificationFailed, "properly infinite criteria disagree on " + p.str());
  return by_definition;
}

std::vector<CardProj> card_decreasing_sequence(const CardProj& p, std::size_t length) {
  if (!card_is_infinite(p).infinite) throw Error(ErrorKind::NotInfinite, p.str() + " is finite");
  std::vector<CardProj> seq;
  for (std::size_t n = 0; n < length; ++n) {
    seq.push_back({ExtNat::omega(), p.corank + ExtNat::fin(n)});
    if (n > 0 && !card_is_sub(seq[n - 1], {seq[n], kOne}))
      throw Error(ErrorKind::CertificationFailed, "sequence step " + std::to_string(n) + " is not a cut");
  }
  return seq;
}

std::vector<ExtNat> card_default_grid() {
  std::vector<ExtNat> g;
  for (std::uint64_t k = 0; k <= 5; ++k) g.push_back(ExtNat::fin(k));
  g.push_back(ExtNat::omega());
  return g;
}

std::vector<CardProj> card_grid_projections(const std::vector<ExtNat>& grid) {
  std::vector<CardProj> out;
  for (const auto& r : grid)
    for (const auto& c : grid)
      if ((r + c).is_omega()) out.push_back({r, c});
  return out;
}

CheckReport card_check_section5(const std::vector<ExtNat>& grid, std::size_t sequence_length) {
  const auto ps = card_grid_projections(grid);
  const auto infinite = [](const CardProj& p) { return card_is_infinite(p).infinite; };
  const auto proper = [](const CardProj& p) { return !p.is_zero() && card_is_properly_infinite(p); };
  const CardProj zero{kZero, ExtNat::omega()};
  const auto subs = [&](const CardProj& p) {
    std::vector<CardSub> out;
    for (const auto& r : grid)
      for (const auto& g : grid) {
        const CardSub s{{r, p.corank + g}, g};
        if (card_is_sub(p, s)) out.push_back(s);
      }
    return out;
  };

  CheckReport rep;
  Tally eq, sub, anti;
  for (const auto& p : ps) {
    eq.check(card_equiv(p, p), [&] { return "reflexive " + p.str(); });
    sub.check(card_subequiv(p, p), [&] { return "reflexive " + p.str(); });
    for (const auto& q : ps) {
      eq.check(card_equiv(p, q) == card_equiv(q, p), [&] { return "symmetric " + pair_str(p, q); });
      anti.check(!(card_subequiv(p, q) && card_subequiv(q, p)) || card_equiv(p, q),
                 [&] { return pair_str(p, q); });
      for (const auto& r : ps) {
        eq.check(!(card_equiv(p, q) && card_equiv(q, r)) || card_equiv(p, r),
                 [&] { return "transitive " + pair_str(p, q) + " " + r.str(); });
        sub.check(!(card_subequiv(p, q) && card_subequiv(q, r)) || card_subequiv(p, r),
                  [&] { return "transitive " + pair_str(p, q) + " " + r.str(); });
      }
    }
  }
  eq.report(rep, "equivalence-relation");
  sub.report(rep, "preorder");
  anti.report(rep, "antisymmetric-up-to-equivalence");

  Tally a, witness;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    const auto v = card_is_infinite(p);
    if (v.witness)
      witness.check(card_is_sub(p, *v.witness) && v.witness->gap != kZero && card_equiv(v.witness->sub, p),
                    [&] { return p.str(); });
    bool by_definition = false;
    for (const auto& s : subs(p)) by_definition = by_definition || (s.gap != kZero && card_equiv(s.sub, p));
    // p = q + r with q, r nonzero and p ~ q: q is a cut of p, r its gap
    bool by_split = false;
    for (const auto& s : subs(p))
      by_split = by_split || (!s.sub.is_zero() && s.gap != kZero && card_equiv(s.sub, p));
    const bool padded = infinite(card_oplus(p, zero)) && infinite(card_oplus(zero, p));
    bool by_oplus = false;
    for (const auto& q : ps) by_oplus = by_oplus || (!q.is_zero() && card_subequiv(card_oplus(p, q), p));
    const bool i1 = v.infinite;
    a.check(i1 == by_definition && i1 == by_split && i1 == padded && i1 == by_oplus, [&] { return p.str(); });
  }
  a.report(rep, "(a) infinite-characterisation");
  witness.report(rep, "infinite-witness");

  Tally b, c, d, e, thm22, rem_inf, rem_oplus, rem20;
  for (const auto& p : ps) {
    for (const auto& s : subs(p))
      rem20.check(infinite(p) || !infinite(s.sub), [&] { return pair_str(p, s.sub); });
    if (!p.is_zero()) {
      const bool pi = proper(p);
      thm22.check(pi == proper(card_oplus(p, zero)) && pi == proper(card_oplus(zero, p)) &&
                      pi == card_subequiv(card_oplus(p, p), p),
                  [&] { return p.str(); });
      rem_inf.check(!pi || infinite(p), [&] { return p.str(); });
    }
    for (const auto& q : ps) {
      b.check(!(card_equiv(p, q) && infinite(p)) || infinite(q), [&] { return pair_str(p, q); });
      const bool mutual = card_subequiv(p, q) && card_subequiv(q, p);
      c.check(!(mutual && proper(p)) || proper(q), [&] { return pair_str(p, q); });
      d.check(!(card_subequiv(p, q) && !infinite(q)) || !infinite(p), [&] { return pair_str(p, q); });
      e.check(!(mutual && (!infinite(p) || !infinite(q))) || card_equiv(p, q), [&] { return pair_str(p, q); });
      const CardProj pq = card_oplus(p, q);
      rem_oplus.check(!(infinite(p) || infinite(q)) || infinite(pq), [&] { return pair_str(p, q); });
      rem_oplus.check(!(proper(p) && proper(q)) || proper(pq), [&] { return pair_str(p, q); });
    }
  }
  b.report(rep, "(b) equivalent-to-infinite");
  c.report(rep, "(c) properly-infinite-mutual");
  d.report(rep, "(d) below-finite");
  e.report(rep, "(e) finite-mutual-equivalent");
  thm22.report(rep, "properly-infinite-criterion");
  rem_inf.report(rep, "properly-infinite-is-infinite");
  rem_oplus.report(rep, "direct-sum-inherits");
  rem20.report(rep, "below-finite-is-finite");

  Tally f;
  for (const auto& p : ps)
    for (const auto& q : ps)
      for (const auto& x : grid) {
        const auto sum = card_orthogonal_sum(p, q, x);
        if (!sum || !proper(p) || !proper(q)) continue;
        f.check(proper(*sum), [&] { return pair_str(p, q); });
      }
  f.report(rep, "(f) orthogonal-sum-properly-infinite");

  Tally seq;
  for (const auto& p : ps) {
    if (!infinite(p)) continue;
    const auto r = card_decreasing_sequence(p, sequence_length);
    // strictness is the nonzero gap; the corank only grows while it is finite
    bool ok = r.front() == p;
    for (std::size_t n = 0; n < r.size(); ++n) {
      ok = ok && card_equiv(r[n], p) && infinite(r[n]);
      if (n + 1 < r.size()) ok = ok && card_is_sub(r[n], {r[n + 1], kOne}) && r[n + 1].corank >= r[n].corank;
    }
    // gaps s_n = r_n - r_{n+1}: rank one, pairwise equivalent and orthogonal,
    // with s_1 + .. + s_n + r_{n+1} = p
    const auto gap = [&](std::size_t n) { return CardProj{kOne, r[n + 1].rank + r[n].corank}; };
    for (std::size_t n = 0; n + 1 < r.size(); ++n) {
      if (n + 2 < r.size()) ok = ok && card_equiv(gap(n), gap(n + 1));
      ExtNat used = ExtNat::fin(n + 1);
      ok = ok && used + r[n + 1].rank == p.rank && r[n + 1].corank == p.corank + used;
    }
    seq.check(ok, [&] { return p.str(); });
  }
  seq.report(rep, "decreasing-sequence");
  return rep;
}

}  // namespace ordproj
