#include "qchaos/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace qchaos::linalg {

namespace {

void check(lapack_int info, const char* routine) {
  if (info != 0) {
    throw NumericalValidationError(std::string(routine) + " failed, info=" + std::to_string(info));
  }
}

}  // namespace

Vec eigvals(const Mat& a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (a.rows() != a.cols()) throw std::invalid_argument("eigvals: matrix not square");
  Mat work = a;
  Vec w(n);
  lapack_complex_double dummy;
  check(LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n, w.data(), &dummy, 1, &dummy, 1),
        "zgeev");
  return w;
}

std::pair<Vec, Mat> eig(const Mat& a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (a.rows() != a.cols()) throw std::invalid_argument("eig: matrix not square");
  Mat work = a;
  Vec w(n);
  Mat vr(n, n);
  lapack_complex_double dummy;
  check(LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, work.data(), n, w.data(), &dummy, 1, vr.data(), n),
        "zgeev");
  return {w, vr};
}

RVec eigvalsh(const Mat& a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  Mat work = a;
  RVec w(n);
  // two-stage tridiagonal reduction; much faster when only values are needed
  check(LAPACKE_zheevd_2stage(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, w.data()), "zheevd_2stage");
  return w;
}

std::pair<RVec, Mat> eigh(const Mat& a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  Mat work = a;
  RVec w(n);
  check(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, work.data(), n, w.data()), "zheevd");
  return {w, work};
}

namespace {

// Phases of e^{i theta} U via the Cayley transform A = i (1 - V)(1 + V)^{-1},
// which is Hermitian with eigenvalues tan(phi/2). Returns false when 1 + V is
// numerically singular.
bool cayley_phases(const Mat& u, double theta, RVec& phi) {
  const lapack_int n = static_cast<lapack_int>(u.rows());
  const cplx rot = std::polar(1.0, theta);
  Mat lhs = rot * u;
  Mat rhs = -lhs;
  lhs.diagonal().array() += 1.0;
  rhs.diagonal().array() += 1.0;
  std::vector<lapack_int> piv(n);
  lapack_int info = LAPACKE_zgesv(LAPACK_COL_MAJOR, n, n, lhs.data(), n, piv.data(), rhs.data(), n);
  if (info > 0) return false;
  check(info, "zgesv");
  Mat a = cplx(0, 1) * rhs;
  a = 0.5 * (a + a.adjoint()).eval();
  phi = eigvalsh(a);
  for (Eigen::Index k = 0; k < phi.size(); ++k) phi[k] = 2.0 * std::atan(phi[k]) - theta;
  return true;
}

// distance from the nearest phase of e^{i theta} U to pi
double closest_to_minus_one(const RVec& phi, double theta) {
  double d = 4.0;
  for (double f : phi) d = std::min(d, std::abs(1.0 + std::polar(1.0, f + theta)));
  return d;
}

}  // namespace

RVec unitary_eigenphases(const Mat& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unitary_eigenphases: matrix not square");
  if (u.rows() == 0) return RVec();
  // An eigenvalue near -1 makes the solve ill conditioned. Start from an
  // offset that structured spectra (phases at multiples of pi/k) avoid, then
  // rotate the widest gap onto -1 if needed.
  const double theta0 = 0.5 * (std::sqrt(5.0) - 1.0);
  RVec phi;
  bool ok = cayley_phases(u, theta0, phi);
  if (!ok || closest_to_minus_one(phi, theta0) < 1e-4) {
    if (!ok) {
      Vec ev = eigvals(u);
      phi.resize(ev.size());
      for (Eigen::Index k = 0; k < ev.size(); ++k) phi[k] = std::arg(ev[k]);
    }
    std::vector<double> s(phi.data(), phi.data() + phi.size());
    for (double& f : s) f = std::remainder(f, 2 * M_PI);
    std::sort(s.begin(), s.end());
    double gap = s.front() + 2 * M_PI - s.back(), mid = s.back() + 0.5 * gap;
    for (std::size_t k = 1; k < s.size(); ++k)
      if (s[k] - s[k - 1] > gap) {
        gap = s[k] - s[k - 1];
        mid = 0.5 * (s[k] + s[k - 1]);
      }
    if (!cayley_phases(u, M_PI - mid, phi)) throw NumericalValidationError("unitary_eigenphases: singular transform");
  }
  for (double& f : phi) {
    f = std::fmod(f, 2 * M_PI);
    if (f < 0) f += 2 * M_PI;
  }
  return phi;
}

RVec svdvals(const Mat& a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  Mat work = a;
  RVec s(std::min(m, n));
  lapack_complex_double dummy;
  check(LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', m, n, work.data(), m, s.data(), &dummy, 1, &dummy, 1),
        "zgesdd");
  return s;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat sqrtm_psd(const Mat& a, double floor) {
  auto [w, v] = eigh(a);
  RVec s = w.unaryExpr([floor](double x) { return x > floor ? std::sqrt(x) : 0.0; });
  return v * s.asDiagonal() * v.adjoint();
}

Mat inv_sqrtm_psd(const Mat& a) {
  auto [w, v] = eigh(a);
  if (w.minCoeff() <= 0.0) throw NumericalValidationError("inv_sqrtm_psd: singular matrix");
  RVec s = w.unaryExpr([](double x) { return 1.0 / std::sqrt(x); });
  return v * s.asDiagonal() * v.adjoint();
}

double unitarity_residual(const Mat& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return (u * u.adjoint() - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double hermiticity_residual(const Mat& a) { return (a - a.adjoint()).cwiseAbs().maxCoeff(); }

double max_abs(const Mat& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

double entropy_of(const RVec& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

Mat ptrace_b(const Mat& rho, int na, int nb) {
  Mat out = Mat::Zero(na, na);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < nb; ++k) acc += rho(i * nb + k, j * nb + k);
      out(i, j) = acc;
    }
  return out;
}

Mat ptrace_a(const Mat& rho, int na, int nb) {
  Mat out = Mat::Zero(nb, nb);
  for (int k = 0; k < na; ++k) out += rho.block(k * nb, k * nb, nb, nb);
  return out;
}

}  // namespace qchaos::linalg
