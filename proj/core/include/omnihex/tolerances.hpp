#pragma once

// Numerical thresholds shared by every module. Tests refer to these names
// rather than repeating literals.

namespace omnihex::tol {

/// ||M + M^T|| above this rejects a matrix passed to vee().
inline constexpr double kSkewSymmetry = 1e-9;

/// Frobenius ||R^T R - I|| and |det R - 1| accepted for a rotation.
inline constexpr double kRotation = 1e-9;

/// Defect that triggers one polar-decomposition Newton step.
inline constexpr double kReorthonormalize = 1e-9;

/// Symmetry check on inertia and gain matrices.
inline constexpr double kSymmetry = 1e-12;

/// Below this rotation angle exp_se3 switches to its Taylor series.
inline constexpr double kExpSeries = 1e-6;

/// Generator pairs with ||g_i x g_j|| below this are skipped in the
/// minimum-guaranteed-wrench formulas.
inline constexpr double kDegeneratePair = 1e-9;

/// Relative singular-value cutoff used for rank decisions.
inline constexpr double kRank = 1e-9;

/// Allocation refuses matrices with a larger 2-norm condition number.
inline constexpr double kAllocationCondition = 1e6;

}  // namespace omnihex::tol
