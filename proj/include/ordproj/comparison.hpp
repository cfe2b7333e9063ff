#pragma once

#include <vector>

#include "ordproj/proj_isometry.hpp"
#include "ordproj/report.hpp"

namespace ordproj {

/// v ∈ PI_{m,n}(V) realising p ~ q: p = |v*| and q = |v|.
struct EquivalenceWitness {
  PartialIsometry v;
  Projection p;
  Projection q;
  double residual = 0.0;
};

/// Re-certifies |v*| = p and |v| = q. Throws CertificationFailed.
EquivalenceWitness certify_equivalence(const Element& v, const Projection& p, const Projection& q);

/// p ~ r <= q, together with p0 = q - r and the witness q ~ p ⊕ p0.
struct SubEquivalenceWitness {
  Projection r;
  EquivalenceWitness inner;
  Projection p0;
  EquivalenceWitness complement;
};

struct UnitaryEquivalence {
  Element u;
  /// Ortho-component of u with |v*| = p, |v| = q.
  EquivalenceWitness v;
  /// u - v, realising e - p ~ e - q.
  EquivalenceWitness w;
};

/// Decided by blockwise ranks. Throws ModelMismatch, or RankError
/// (NotEquivalent) carrying both rank vectors.
EquivalenceWitness equivalent(const Projection& p, const Projection& q);

/// u1 = u p for p <= |u|. Throws NotDominated or CertificationFailed.
PartialIsometry cond_H_witness(const PartialIsometry& u, const Projection& p);

/// w = v u* for |u| = |v|, certified by w*w = uu* and ww* = vv*. Throws
/// SupportMismatch or CertificationFailed.
PartialIsometry cond_T_witness(const PartialIsometry& u, const PartialIsometry& v);

struct Lemma13Split {
  Projection q1;
  EquivalenceWitness w1;
  EquivalenceWitness w2;
};

/// Cuts p ~ q along p1 <= p with v1 = p1 v. Throws NotDominated or
/// CertificationFailed.
Lemma13Split lemma13_split(const EquivalenceWitness& w, const Projection& p1);

/// Throws ModelMismatch, or RankError (NotSubEquivalent).
SubEquivalenceWitness subequivalent(const Projection& p, const Projection& q);

/// u = v + w. Throws ShapeMismatch or RankError (NotUnitarilyEquivalent).
UnitaryEquivalence unitarily_equivalent(const Projection& p, const Projection& q);

/// [[v*, e - q], [e - p, v]] for a witness of p ~ q.
Element cor_u_unitary(const EquivalenceWitness& w);

/// One clause (1)..(6) of the algebra of ~. Clause (2) reads p ~ q, p' ~ q'
/// with p ⊥ p', q ⊥ q'; clause (3) p ~ q, p' ~ q'; clause (5) uses p ⊥ p';
/// clause (6) associates p, q, p'. Throws PreconditionViolated.
CheckReport check_prop15_clause(int clause, const Projection& p, const Projection& q,
                                const Projection& pp, const Projection& qp);
/// All clauses; those whose preconditions fail are reported with the note
/// "skipped" and do not count as failures.
CheckReport check_prop15(const Projection& p, const Projection& q, const Projection& pp,
                         const Projection& qp);

/// Reflexivity, symmetry and transitivity of ~ and ⪯ over the sample.
CheckReport check_preorder(const std::vector<Projection>& ps);

/// p ⪯ r and q ⪯ s imply p ⊕ q ⪯ r ⊕ s, with the direct sum of the two
/// witnesses. Throws PreconditionViolated unless both premises hold.
CheckReport check_prop16_oplus(const Projection& p, const Projection& q, const Projection& r,
                               const Projection& s);

/// p ~ q ⇔ p ⊕ 0 ~u q ⊕ 0 ⇔ 0 ⊕ p ~u 0 ⊕ q, with the explicit unitaries.
CheckReport check_cor_u(const Projection& p, const Projection& q);

/// p ~u δ* p δ via v = p δ; α p α* ~ p for every isometry α given.
/// Throws NotUnitary / NotIsometry.
CheckReport scalar_unitary_conj_equiv(const Projection& p, const CMat& delta,
                                      const CMat& alpha = CMat());

}  // namespace ordproj
