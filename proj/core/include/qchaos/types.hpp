#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qchaos {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Dense complex matrix tagged with the seed and ensemble that produced it.
struct ComplexMatrix {
  Mat m;
  std::uint64_t seed = 0;
  std::string provenance;

  Eigen::Index rows() const { return m.rows(); }
  Eigen::Index cols() const { return m.cols(); }
};

using UnitaryOperator = ComplexMatrix;
using PureState = Vec;
using DensityMatrix = Mat;

// Raised when an operator fails a required symmetry (e.g. parity commutator).
class SymmetryViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a structural residual (unitarity, CPTP, ...) exceeds tolerance.
class NumericalValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qchaos
