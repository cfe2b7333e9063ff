#pragma once

#include <functional>
#include <vector>

#include "ordproj/cmat.hpp"

namespace ordproj {

/// Numerical thresholds shared by every predicate in the library.
///
/// `eps_eq` is the relative Frobenius threshold behind every matrix equality,
/// `eps_psd` the allowed eigenvalue negativity (relative to max(1, ||a||)) for
/// positivity, and `eps_offdiag` the Jacobi stopping threshold.
struct TolerancePolicy {
  double eps_eq = 1e-9;
  double eps_psd = 1e-8;
  double eps_offdiag = 1e-12;

  /// Throws PreconditionViolated unless all thresholds are positive and
  /// eps_offdiag <= eps_eq.
  void validate() const;
};

struct EigDecomp {
  std::vector<double> values;  // ascending
  CMat vectors;                // columns are orthonormal eigenvectors
};

/// Full singular value decomposition v = left * diag(singulars) * right*,
/// with `left` m x m, `right` n x n and min(m, n) singular values in
/// descending order.
struct Svd {
  CMat left;
  std::vector<double> singulars;
  CMat right;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Each eigenvector is
/// phase-normalised so that its largest-modulus entry is real positive.
EigDecomp herm_eig(const CMat& a, const TolerancePolicy& tol = {});

/// Q f(Λ) Q* for Hermitian a; the result is exactly Hermitian.
CMat spectral_apply(const CMat& a, const std::function<double(double)>& f,
                    const TolerancePolicy& tol = {});

/// Positive square root. Eigenvalues in [-eps_psd ||a||, 0) are clamped to 0,
/// as are nonnegative eigenvalues below the eps_offdiag ||a|| noise floor.
CMat psd_sqrt(const CMat& a, const TolerancePolicy& tol = {});

/// One-sided (Hestenes) Jacobi SVD.
Svd svd(const CMat& v, const TolerancePolicy& tol = {});

bool is_hermitian(const CMat& a, const TolerancePolicy& tol = {});

/// Hermitian within eps_eq and min eigenvalue >= -eps_psd max(1, ||a||).
bool is_psd(const CMat& a, const TolerancePolicy& tol = {});

/// How far a fails to be PSD: max(0, -min eigenvalue) / max(1, ||a||).
double psd_defect(const CMat& a, const TolerancePolicy& tol = {});

/// True iff a + shift I has a Cholesky factorisation (a taken Hermitian).
bool cholesky_succeeds(const CMat& a, double shift);

double op_norm(const CMat& v, const TolerancePolicy& tol = {});

/// ||a - b||_F / max(1, ||a||_F, ||b||_F). Throws ShapeMismatch.
double eq_residual(const CMat& a, const CMat& b);

bool mat_eq(const CMat& a, const CMat& b, const TolerancePolicy& tol = {});

/// Orthonormal basis of the eigenspace of a Hermitian matrix for eigenvalues
/// above `threshold`, ordered by descending eigenvalue. Returned as columns.
CMat eigenspace_above(const CMat& a, double threshold, const TolerancePolicy& tol = {});

/// Extends the orthonormal columns of `basis` (rows x k) to a unitary
/// rows x rows matrix by Gram-Schmidt against the standard basis.
CMat complete_orthonormal(const CMat& basis);

}  // namespace ordproj
