#include "ordproj/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ordproj/error.hpp"

namespace ordproj {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kNegligible = 1e-30;

// Unitary U = [[c, s], [-s*phase, c*phase]] on coordinates (p, q) with
// U* [[app, apq], [conj(apq), aqq]] U diagonal.
struct PlaneRotation {
  double c = 1.0;
  double s = 0.0;
  cplx phase{1.0, 0.0};
};

PlaneRotation plane_rotation(double app, double aqq, cplx apq) {
  PlaneRotation rot;
  const double mag = std::abs(apq);
  if (mag == 0.0) return rot;
  rot.phase = std::conj(apq) / mag;
  rot.phase /= std::abs(rot.phase);  // subnormal apq loses the unit modulus
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  rot.c = 1.0 / std::hypot(1.0, t);
  rot.s = t * rot.c;
  return rot;
}

// m <- m U on columns p, q.
void rotate_columns(CMat& m, std::size_t p, std::size_t q, const PlaneRotation& r) {
  const cplx up_q = -r.s * r.phase;
  const cplx uq_q = r.c * r.phase;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const cplx xp = m(k, p);
    const cplx xq = m(k, q);
    m(k, p) = r.c * xp + up_q * xq;
    m(k, q) = r.s * xp + uq_q * xq;
  }
}

// m <- U* m on rows p, q.
void rotate_rows(CMat& m, std::size_t p, std::size_t q, const PlaneRotation& r) {
  const cplx cph = std::conj(r.phase);
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const cplx xp = m(p, k);
    const cplx xq = m(q, k);
    m(p, k) = r.c * xp - r.s * cph * xq;
    m(q, k) = r.s * xp + r.c * cph * xq;
  }
}

double off_diagonal_mass(const CMat& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

void normalise_phase(std::vector<cplx>& v) {
  std::size_t best = 0;
  double best_mod = -1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double mod = std::abs(v[i]);
    if (mod > best_mod * (1.0 + 1e-12)) {
      best_mod = mod;
      best = i;
    }
  }
  if (best_mod <= 0.0) return;
  const cplx ph = std::conj(v[best]) / best_mod;
  for (auto& x : v) x *= ph;
  v[best] = best_mod;
}

double dot_norm2(std::span<const cplx> v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::norm(x);
  return acc;
}

// Gram-Schmidt step: v <- v - sum_j (q_j* v) q_j for the first k columns of q.
void project_out(std::vector<cplx>& v, const CMat& q, std::size_t k) {
  for (std::size_t j = 0; j < k; ++j) {
    cplx d{};
    for (std::size_t i = 0; i < q.rows(); ++i) d += std::conj(q(i, j)) * v[i];
    for (std::size_t i = 0; i < q.rows(); ++i) v[i] -= d * q(i, j);
  }
}

// Hestenes one-sided Jacobi for tall (rows >= cols) matrices.
Svd svd_tall(const CMat& v, const TolerancePolicy& tol) {
  const std::size_t m = v.rows();
  const std::size_t n = v.cols();
  CMat u = v;
  CMat right = CMat::identity(n);
  // Columns at rounding level of the whole matrix are numerically zero; their
  // noise never becomes orthogonal to the rest.
  const double negligible = std::pow(1e-15 * v.frobenius(), 2);

  bool converged = n < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        cplx gamma{};
        for (std::size_t k = 0; k < m; ++k) {
          alpha += std::norm(u(k, p));
          beta += std::norm(u(k, q));
          gamma += std::conj(u(k, p)) * u(k, q);
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= tol.eps_offdiag * std::sqrt(alpha * beta)) continue;
        if (std::min(alpha, beta) <= negligible) continue;
        converged = false;
        const PlaneRotation r = plane_rotation(alpha, beta, gamma);
        rotate_columns(u, p, q, r);
        rotate_columns(right, p, q, r);
      }
    }
  }
  if (!converged) throw Error(ErrorKind::NoConvergence, "one-sided Jacobi SVD exceeded sweep cap");

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < m; ++k) acc += std::norm(u(k, j));
    norms[j] = std::sqrt(acc);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });

  Svd out;
  out.singulars.resize(n);
  out.right = CMat(n, n);
  const double smax = n ? norms[order[0]] : 0.0;
  const double floor = 1e-14 * smax;
  CMat left(m, n);
  std::size_t kept = 0;
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::size_t j = order[idx];
    out.singulars[idx] = norms[j];
    out.right.set_column(idx, right.column(j));
    if (norms[j] > floor && norms[j] > 0.0) {
      auto col = u.column(j);
      for (auto& x : col) x /= norms[j];
      left.set_column(idx, col);
      kept = idx + 1;
    }
  }
  out.left = complete_orthonormal(left.block(0, 0, m, kept));
  return out;
}

}  // namespace

void TolerancePolicy::validate() const {
  if (!(eps_eq > 0.0) || !(eps_psd > 0.0) || !(eps_offdiag > 0.0))
    throw Error(ErrorKind::PreconditionViolated, "tolerances must be strictly positive");
  if (eps_offdiag > eps_eq)
    throw Error(ErrorKind::PreconditionViolated, "eps_offdiag must not exceed eps_eq");
}

EigDecomp herm_eig(const CMat& a_in, const TolerancePolicy& tol) {
  if (!a_in.is_square()) throw Error(ErrorKind::NotHermitian, "matrix is not square");
  const double fro = a_in.frobenius();
  const double skew = (a_in - a_in.adjoint()).frobenius();
  if (skew > tol.eps_eq * std::max(1.0, fro)) {
    throw Error(ErrorKind::NotHermitian, "||a - a*||_F = " + std::to_string(skew), skew);
  }
  const std::size_t n = a_in.rows();
  CMat a = hermitian_part(a_in);
  CMat vecs = CMat::identity(n);

  const double target = tol.eps_offdiag * a.frobenius();
  bool converged = off_diagonal_mass(a) <= target;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        if (apq == cplx{}) continue;
        if (std::abs(apq) <= kNegligible * fro) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const PlaneRotation r = plane_rotation(a(p, p).real(), a(q, q).real(), apq);
        rotate_columns(a, p, q, r);
        rotate_rows(a, p, q, r);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        rotate_columns(vecs, p, q, r);
      }
    }
    converged = off_diagonal_mass(a) <= target;
  }
  if (!converged) throw Error(ErrorKind::NoConvergence, "Jacobi eigensolver exceeded sweep cap");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  EigDecomp out;
  out.values.resize(n);
  out.vectors = CMat(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    auto col = vecs.column(order[k]);
    normalise_phase(col);
    out.vectors.set_column(k, col);
  }
  return out;
}

CMat spectral_apply(const CMat& a, const std::function<double(double)>& f,
                    const TolerancePolicy& tol) {
  const EigDecomp eig = herm_eig(a, tol);
  const std::size_t n = a.rows();
  CMat out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vi = fk * eig.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eig.vectors(j, k));
    }
  }
  return hermitian_part(out);
}

CMat psd_sqrt(const CMat& a, const TolerancePolicy& tol) {
  const EigDecomp eig = herm_eig(a, tol);
  double norm = 0.0;
  for (double v : eig.values) norm = std::max(norm, std::abs(v));
  if (!eig.values.empty() && eig.values.front() < -tol.eps_psd * std::max(1.0, norm)) {
    throw Error(ErrorKind::NotPSD, "min eigenvalue " + std::to_string(eig.values.front()),
                -eig.values.front() / std::max(1.0, norm));
  }
  const double floor = tol.eps_offdiag * norm;
  const std::size_t n = a.rows();
  CMat out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] <= floor) continue;
    const double r = std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vi = r * eig.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eig.vectors(j, k));
    }
  }
  return hermitian_part(out);
}

Svd svd(const CMat& v, const TolerancePolicy& tol) {
  if (v.rows() >= v.cols()) return svd_tall(v, tol);
  Svd t = svd_tall(v.adjoint(), tol);
  return Svd{std::move(t.right), std::move(t.singulars), std::move(t.left)};
}

bool is_hermitian(const CMat& a, const TolerancePolicy& tol) {
  return a.is_square() && mat_eq(a, a.adjoint(), tol);
}

double psd_defect(const CMat& a, const TolerancePolicy& tol) {
  const EigDecomp eig = herm_eig(a, tol);
  double norm = 0.0;
  for (double v : eig.values) norm = std::max(norm, std::abs(v));
  if (eig.values.empty()) return 0.0;
  return std::max(0.0, -eig.values.front()) / std::max(1.0, norm);
}

bool is_psd(const CMat& a, const TolerancePolicy& tol) {
  if (!is_hermitian(a, tol)) return false;
  return psd_defect(a, tol) <= tol.eps_psd;
}

bool cholesky_succeeds(const CMat& a_in, double shift) {
  CMat a = hermitian_part(a_in);
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) a(i, i) += shift;
  // In-place lower Cholesky.
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(a(j, k));
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    a(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= a(i, k) * std::conj(a(j, k));
      a(i, j) = s / ljj;
    }
  }
  return true;
}

double op_norm(const CMat& v, const TolerancePolicy& tol) {
  if (v.empty()) return 0.0;
  // Symmetric in v and v* so that op_norm(v) == op_norm(v*) bit for bit.
  const Svd a = svd(v, tol);
  const Svd b = svd(v.adjoint(), tol);
  return std::max(a.singulars.front(), b.singulars.front());
}

double eq_residual(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "mat_eq on different shapes");
  }
  double diff = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) diff += std::norm(a.data()[k] - b.data()[k]);
  const double scale = std::max({1.0, a.frobenius(), b.frobenius()});
  return std::sqrt(diff) / scale;
}

bool mat_eq(const CMat& a, const CMat& b, const TolerancePolicy& tol) {
  return eq_residual(a, b) <= tol.eps_eq;
}

CMat eigenspace_above(const CMat& a, double threshold, const TolerancePolicy& tol) {
  const EigDecomp eig = herm_eig(a, tol);
  const std::size_t n = a.rows();
  std::size_t count = 0;
  for (double v : eig.values) count += v > threshold ? 1 : 0;
  CMat out(n, count);
  // values ascending: take from the top down
  for (std::size_t k = 0; k < count; ++k) out.set_column(k, eig.vectors.column(n - 1 - k));
  return out;
}

CMat complete_orthonormal(const CMat& basis) {
  const std::size_t n = basis.rows();
  const std::size_t k0 = basis.cols();
  if (k0 > n) throw Error(ErrorKind::ShapeError, "more basis vectors than dimension");
  CMat q(n, n);
  q.set_block(0, 0, basis);
  std::vector<bool> used(n, false);
  for (std::size_t k = k0; k < n; ++k) {
    std::size_t best = n;
    double best_norm = -1.0;
    std::vector<cplx> best_vec;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      std::vector<cplx> e(n);
      e[i] = 1.0;
      project_out(e, q, k);
      project_out(e, q, k);
      const double nr = dot_norm2(e);
      if (nr > best_norm) {
        best_norm = nr;
        best = i;
        best_vec = std::move(e);
      }
    }
    used[best] = true;
    const double len = std::sqrt(best_norm);
    for (auto& x : best_vec) x /= len;
    q.set_column(k, best_vec);
  }
  return q;
}

}  // namespace ordproj
