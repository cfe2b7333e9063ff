#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ordproj/element.hpp"
#include "ordproj/report.hpp"

namespace ordproj {

class Rng;

/// |v|, blockwise spectral absolute value.
SelfAdjoint abs_sa(const SelfAdjoint& v);
/// (|v| + v) / 2 and (|v| - v) / 2.
SelfAdjoint pos_part(const SelfAdjoint& v);
SelfAdjoint neg_part(const SelfAdjoint& v);

/// a <= b in the matrix order, i.e. b - a positive within eps_psd.
bool leq(const Element& a, const Element& b);

/// Projection onto the span of eigenvectors of the positive element v with
/// eigenvalue above eps_psd * max(1, max block norm).
Element support_projection(const Element& v);

/// Smallest eigenvalue of v above the support threshold, over all blocks;
/// 0 when v is zero.
double min_positive_eigenvalue(const Element& v);

/// eq_residual of |u - v| against u + v. Throws NotPositive.
double ortho_pos_residual(const Element& u, const Element& v);
/// u ⊥ v for positives: |u - v| = u + v.
bool ortho_pos(const Element& u, const Element& v);

/// max_j ||u_j v_j||_F / max(1, ||u_j||_F ||v_j||_F). Throws NotPositive.
double ortho_alg_residual(const Element& u, const Element& v);
/// uv = 0 blockwise.
bool ortho_alg(const Element& u, const Element& v);

/// Norm-additivity orthogonality for nonzero positives. The residual is the
/// larger of |N(u/N(u) + v/N(v)) - 1| and the worst relative defect of
/// N(u + kv) = max(N(u), N(kv)) over k = ±2^-3, ..., ±2^3, with N the
/// order-unit norm. Throws ZeroElement or NotPositive.
double ortho_inf_residual(const Element& u, const Element& v);
bool ortho_inf(const Element& u, const Element& v);

/// ortho_inf(u, v) together with ortho_inf on the dominated pair
/// (c_u P_u, c_v P_v), P the support projection and c the smallest positive
/// eigenvalue. Plain norm additivity does not see overlapping supports below
/// the top eigenvalue; this pair does.
bool ortho_inf_hereditary(const Element& u, const Element& v);

/// u ⊥ v for self-adjoints: |u| ⊥ |v|.
bool ortho_general_sa(const SelfAdjoint& u, const SelfAdjoint& v);

struct Prop1Result {
  bool orthogonal = false;        // u ⊥ v
  bool parts_orthogonal = false;  // u+, u-, v+, v- mutually orthogonal
  bool abs_additive = false;      // |u ± v| = |u| + |v|
  bool consistent = false;        // all three agree
  double residual = 0.0;          // margin of the closest decision
};
Prop1Result check_prop1(const SelfAdjoint& u, const SelfAdjoint& v);

struct AxiomTally {
  std::string axiom;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double worst = 0.0;
};

/// Per-axiom counts for the absolute-value axioms (abs1..abs5) and the
/// orthogonality characterisation (orth1..orth6).
struct AxiomReport {
  std::vector<AxiomTally> axioms;
  std::size_t triples = 0;

  bool all_pass() const;
  double worst_residual() const;
  const AxiomTally* find(const std::string& axiom) const;
};

using SaTriple = std::array<SelfAdjoint, 3>;

/// Dominated element b^{1/2} c* c b^{1/2} / max(1, ||c||^2), c Gaussian.
Element random_dominated(const Element& b, Rng& rng);

/// Checks every axiom on every triple; random contractions and constructed
/// decompositions are drawn from `seed`. Throws ModelMismatch.
AxiomReport check_abs_axioms(const Model& model, std::span<const SaTriple> sample,
                             std::uint64_t seed);

}  // namespace ordproj
