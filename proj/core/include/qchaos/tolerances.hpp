#pragma once

namespace qchaos::tol {

inline constexpr double kUnitary = 1e-10;
inline constexpr double kNorm = 1e-12;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kMinEigen = -1e-8;
inline constexpr double kPhaseModulus = 1e-8;
inline constexpr double kParity = 1e-6;
inline constexpr double kZeroSpacing = 1e-12;
inline constexpr double kKraus = 1e-9;
inline constexpr double kChoi = 1e-8;
inline constexpr double kClamp = 1e-10;
inline constexpr double kSigmas = 3.0;
inline constexpr double kKS = 0.05;

}  // namespace qchaos::tol
