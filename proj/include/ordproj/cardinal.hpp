#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordproj/report.hpp"

namespace ordproj {

/// ℕ ∪ {ω} with absorbing addition.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  static constexpr ExtNat fin(std::uint64_t k) { return ExtNat(k, false); }
  static constexpr ExtNat omega() { return ExtNat(0, true); }

  constexpr bool is_omega() const noexcept { return omega_; }
  /// Throws PreconditionViolated for ω.
  std::uint64_t value() const;

  friend constexpr bool operator==(const ExtNat&, const ExtNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.omega_ || b.omega_) return a.omega_ <=> b.omega_;
    return a.k_ <=> b.k_;
  }
  friend constexpr ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.omega_ || b.omega_) return omega();
    return fin(a.k_ + b.k_);
  }

  std::string str() const;

 private:
  constexpr ExtNat(std::uint64_t k, bool omega) : k_(k), omega_(omega) {}
  std::uint64_t k_ = 0;
  bool omega_ = false;
};

/// Projection of a Hilbert space of dimension rank + corank, up to unitary
/// conjugation.
struct CardProj {
  ExtNat rank;
  ExtNat corank;

  ExtNat ambient() const { return rank + corank; }
  bool is_zero() const { return rank == ExtNat::fin(0); }
  friend bool operator==(const CardProj&, const CardProj&) = default;
  std::string str() const;
};

/// A sub-projection s <= p together with the rank of p - s.
struct CardSub {
  CardProj sub;
  ExtNat gap;
};

/// Whether (s, gap) describes a sub-projection of p.
bool card_is_sub(const CardProj& p, const CardSub& s);
/// p + q for p ⊥ q whose sum has the given corank; nullopt when no such
/// orthogonal pair exists.
std::optional<CardProj> card_orthogonal_sum(const CardProj& p, const CardProj& q, const ExtNat& corank);

/// Both throw AmbientMismatch unless the ambients agree.
bool card_equiv(const CardProj& p, const CardProj& q);
bool card_subequiv(const CardProj& p, const CardProj& q);
CardProj card_oplus(const CardProj& p, const CardProj& q);

struct InfiniteVerdict {
  bool infinite = false;
  /// q <= p, q ~ p, q ≠ p when infinite.
  std::optional<CardSub> witness;
};
InfiniteVerdict card_is_infinite(const CardProj& p);

/// Decided by the definition and by p ⊕ p ⪯ p; throws CertificationFailed
/// if they disagree and ZeroProjection for p = 0.
bool card_is_properly_infinite(const CardProj& p);

/// r_1 = p > r_2 > ... > r_k, all equivalent to p with rank-one gaps.
/// Throws NotInfinite.
std::vector<CardProj> card_decreasing_sequence(const CardProj& p, std::size_t length);

/// Every projection of ℓ² whose rank and corank lie in the grid.
std::vector<CardProj> card_grid_projections(const std::vector<ExtNat>& grid);
/// {0, .., 5, ω}
std::vector<ExtNat> card_default_grid();

/// Exhaustive check of the infinite-projection results on the grid, plus the
/// relation laws of ~ and ⪯. Every clause note records its case count.
CheckReport card_check_section5(const std::vector<ExtNat>& grid, std::size_t sequence_length = 6);

}  // namespace ordproj
