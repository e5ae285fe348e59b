#pragma once

#include <utility>

#include "qchaos/types.hpp"

namespace qchaos::linalg {

// General complex eigenproblem (LAPACK zgeev).
Vec eigvals(const Mat& a);
std::pair<Vec, Mat> eig(const Mat& a);

// Hermitian eigenproblem (LAPACK zheevd); eigenvalues ascending.
RVec eigvalsh(const Mat& a);
std::pair<RVec, Mat> eigh(const Mat& a);

// Eigenphases in [0, 2pi) of a unitary (unsorted), from a Hermitian
// eigenproblem after a Cayley transform. Several times cheaper than eigvals.
RVec unitary_eigenphases(const Mat& u);

// Singular values, descending (LAPACK zgesdd).
RVec svdvals(const Mat& a);

Mat kron(const Mat& a, const Mat& b);

// Functions of a Hermitian positive semidefinite matrix; eigenvalues below
// `floor` are treated as zero.
Mat sqrtm_psd(const Mat& a, double floor = 0.0);
Mat inv_sqrtm_psd(const Mat& a);

// max_ij |(U U^dag - 1)_ij|
double unitarity_residual(const Mat& u);
double hermiticity_residual(const Mat& a);
double max_abs(const Mat& a);

// -sum p ln p over entries, with 0 ln 0 = 0 and tiny negatives clamped.
double entropy_of(const RVec& p);

// Partial traces of an operator on C^{na} (x) C^{nb}, index order (a, b).
Mat ptrace_b(const Mat& rho, int na, int nb);
Mat ptrace_a(const Mat& rho, int na, int nb);

}  // namespace qchaos::linalg
