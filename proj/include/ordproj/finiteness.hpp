#pragma once

#include <cstdint>

#include "ordproj/proj_isometry.hpp"
#include "ordproj/report.hpp"

namespace ordproj {

/// Finiteness of p by falsification: `samples` dominated projections of
/// the same blockwise rank must all equal p, and strictly smaller dominated
/// projections must never be equivalent to p. Clause "finite" carries the
/// verdict.
CheckReport is_finite_matrix(const Projection& p, std::size_t samples = 50, std::uint64_t seed = 0);

/// An isometry in M_n(V) is unitary. Throws NotIsometry.
CheckReport verify_isometry_unitary(const Element& v);

/// Clauses: p1, p2 and p1 + p2 finite whenever q is. Throws
/// PreconditionViolated unless p1, p2 <= q and p1 ⊥ p2.
CheckReport check_remark20(const Projection& p1, const Projection& p2, const Projection& q,
                           std::uint64_t seed = 0);

/// Square isometry built by completing a random orthonormal frame per block.
Element random_square_isometry(const Model& model, std::size_t n, Rng& rng);

}  // namespace ordproj
