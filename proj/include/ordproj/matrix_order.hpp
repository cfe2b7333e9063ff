#pragma once

#include <cstddef>

#include "ordproj/element.hpp"
#include "ordproj/report.hpp"

namespace ordproj {

/// |v| = (v* v)^{1/2} in M_n(V) for v in M_{m,n}(V), computed blockwise from
/// the singular value decomposition.
Element abs_rect(const Element& v);

/// Block-diagonal v ⊕ w. Throws ModelMismatch.
Element oplus(const Element& v, const Element& w);
/// [v; w] and [v w]. Throws ModelMismatch / ShapeError.
Element stack_rows(const Element& v, const Element& w);
Element stack_cols(const Element& v, const Element& w);
/// [[0, v], [v*, 0]].
Element suspend(const Element& v);

/// v placed at (row, col) inside a zero element of shape total_m x total_n.
/// Throws ShapeError when it does not fit.
Element corner_embed(const Element& v, std::size_t row, std::size_t col, std::size_t total_m,
                     std::size_t total_n);

/// Sub-element of shape nr x nc starting at (row, col).
Element sub_element(const Element& v, std::size_t row, std::size_t col, std::size_t nr,
                    std::size_t nc);

/// α v β with α (r x m), β (n x s) complex scalar matrices acting by
/// amplification. Throws ShapeError.
Element scalar_act(const CMat& alpha, const Element& v, const CMat& beta);
/// α v, v β.
Element scalar_left(const CMat& alpha, const Element& v);
Element scalar_right(const Element& v, const CMat& beta);

/// Positivity defect of ||α|| ||v| β| - |α v β|; the scaling inequality holds
/// when this is at most eps_psd.
double scalar_act_defect(const CMat& alpha, const Element& v, const CMat& beta);

/// u ⊥ v for rectangular elements, via their suspensions. Throws ShapeError.
bool ortho_rect(const Element& u, const Element& v);

/// Order-unit norm inf{k : [[k e, v], [v*, k e]] >= 0} by bisection.
double order_unit_norm(const Element& v);
/// max over blocks of the largest singular value (independent oracle).
double spectral_norm(const Element& v);

CheckReport check_prop5(const Element& u, const Element& v);
CheckReport check_zero_prop(const Element& v);
CheckReport check_norm_prop(const Element& v);
/// Clauses r3.1 .. r3.5 for v with the given isometry α (r x m, α*α = I).
CheckReport check_remark3(const Element& v, const CMat& isometry);
/// Direct-sum clause of the remark for positive quadruples.
CheckReport check_remark4_sum(const Element& u1, const Element& v1, const Element& u2,
                              const Element& v2);
/// Suspension clause: u ⊥ v iff |u| ⊥ |v| and |u*| ⊥ |v*|.
CheckReport check_remark4_rect(const Element& u, const Element& v);

}  // namespace ordproj
