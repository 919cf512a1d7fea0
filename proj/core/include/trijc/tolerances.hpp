#pragma once

// Numerical tolerance profile shared by every module.

namespace trijc::tol {

inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsdSlack = 1e-10;
inline constexpr double kEigenResidual = 1e-10;

// Criteria report a violation only when lhs exceeds rhs by more than this.
inline constexpr double kCriterionViolation = 1e-9;

// Support on an excitation sector the truncated dynamics cannot represent.
inline constexpr double kTruncationSupport = 1e-12;

// SDP solver contract.
inline constexpr double kSdpGap = 1e-7;
inline constexpr double kSdpFeasibility = 1e-8;
// Genuine negativity below this is reported as exactly zero.
inline constexpr double kGenuineNegativityFloor = 1e-6;

}  // namespace trijc::tol
