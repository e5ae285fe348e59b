#include "qchaos/ensembles.hpp"

#include <cmath>

#include "qchaos/linalg.hpp"
#include "qchaos/tolerances.hpp"

namespace qchaos {

namespace {

void require_dim(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": dimension must be >= 1");
}

}  // namespace

Mat ginibre(Rng& rng, int rows, int cols) {
  require_dim(rows, "ginibre");
  require_dim(cols, "ginibre");
  Mat g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = rng.cnormal();
  return g;
}

Mat cue(Rng& rng, int n) {
  require_dim(n, "cue");
  Eigen::HouseholderQR<Mat> qr(ginibre(rng, n, n));
  Mat q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    cplx d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= (a > 0 ? d / a : cplx(1.0));
  }
  return q;
}

Mat haar_isometry(Rng& rng, int rows, int cols) {
  require_dim(cols, "haar_isometry");
  if (rows < cols) throw std::invalid_argument("haar_isometry: rows < cols");
  Eigen::HouseholderQR<Mat> qr(ginibre(rng, rows, cols));
  Mat q = qr.householderQ() * Mat::Identity(rows, cols);
  const auto& r = qr.matrixQR();
  for (int j = 0; j < cols; ++j) {
    cplx d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= (a > 0 ? d / a : cplx(1.0));
  }
  return q;
}

Mat coe(Rng& rng, int n) {
  Mat w = cue(rng, n);
  Mat u = w * w.transpose();
  return 0.5 * (u + u.transpose());
}

Mat gue(Rng& rng, int n) {
  require_dim(n, "gue");
  Mat h(n, n);
  const double s = std::sqrt(0.5);
  for (int j = 0; j < n; ++j) {
    h(j, j) = s * rng.normal();
    for (int i = j + 1; i < n; ++i) {
      cplx z = 0.5 * rng.cnormal();
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return h;
}

RMat goe(Rng& rng, int n) {
  require_dim(n, "goe");
  RMat h(n, n);
  const double s = std::sqrt(0.5);
  for (int j = 0; j < n; ++j) {
    h(j, j) = rng.normal();
    for (int i = j + 1; i < n; ++i) h(i, j) = h(j, i) = s * rng.normal();
  }
  return h;
}

Vec haar_state(Rng& rng, int n) {
  Vec v = ginibre(rng, n, 1).col(0);
  return v / v.norm();
}

RVec real_haar_state(Rng& rng, int n) {
  require_dim(n, "real_haar_state");
  RVec v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.normal();
  return v / v.norm();
}

Mat induced_state(Rng& rng, int n, int k_env) {
  Mat g = ginibre(rng, n, k_env);
  Mat w = g * g.adjoint();
  return w / w.trace().real();
}

ComplexMatrix sample_ginibre(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  return {ginibre(rng, rows, cols), seed, "ginibre"};
}

UnitaryOperator sample_cue(int n, std::uint64_t seed) {
  Rng rng(seed);
  return {cue(rng, n), seed, "cue"};
}

UnitaryOperator sample_coe(int n, std::uint64_t seed) {
  Rng rng(seed);
  return {coe(rng, n), seed, "coe"};
}

ComplexMatrix sample_gue(int n, std::uint64_t seed) {
  Rng rng(seed);
  return {gue(rng, n), seed, "gue"};
}

ComplexMatrix sample_goe(int n, std::uint64_t seed) {
  Rng rng(seed);
  return {goe(rng, n).cast<cplx>(), seed, "goe"};
}

PureState sample_haar_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  return haar_state(rng, n);
}

RVec sample_real_haar_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  return real_haar_state(rng, n);
}

DensityMatrix sample_induced_state(int n, int k_env, std::uint64_t seed) {
  Rng rng(seed);
  return induced_state(rng, n, k_env);
}

std::vector<Mat> sample_ensemble(const EnsembleSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("sample_ensemble: count must be >= 1");
  std::vector<Mat> out;
  out.reserve(spec.count);
  for (int k = 0; k < spec.count; ++k) {
    Rng rng = substream(spec.seed, k);
    const auto& e = spec.ensemble;
    if (e == "ginibre") out.push_back(ginibre(rng, spec.dim, spec.dim));
    else if (e == "cue") out.push_back(cue(rng, spec.dim));
    else if (e == "coe") out.push_back(coe(rng, spec.dim));
    else if (e == "gue") out.push_back(gue(rng, spec.dim));
    else if (e == "goe") out.push_back(goe(rng, spec.dim).cast<cplx>());
    else if (e == "haar_state") out.push_back(haar_state(rng, spec.dim));
    else if (e == "induced") out.push_back(induced_state(rng, spec.dim, spec.k_env > 0 ? spec.k_env : spec.dim));
    else throw std::invalid_argument("unknown ensemble: " + e);
  }
  return out;
}

void validate_unitary(const Mat& u, double tol) {
  if (!u.allFinite()) throw NumericalValidationError("non-finite entries");
  double r = linalg::unitarity_residual(u);
  if (!(r < tol)) throw NumericalValidationError("unitarity residual " + std::to_string(r));
}

void validate_density_matrix(const Mat& rho) {
  if (rho.rows() != rho.cols() || rho.rows() < 1) throw NumericalValidationError("density matrix not square");
  if (!rho.allFinite()) throw NumericalValidationError("non-finite entries");
  if (linalg::hermiticity_residual(rho) > tol::kHermitian) throw NumericalValidationError("density matrix not Hermitian");
  if (std::abs(rho.trace() - cplx(1.0)) > tol::kTrace) throw NumericalValidationError("density matrix trace != 1");
  if (linalg::eigvalsh(rho).minCoeff() < tol::kMinEigen) throw NumericalValidationError("density matrix not positive");
}

}  // namespace qchaos
