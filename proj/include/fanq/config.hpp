#pragma once

namespace fanq {

/// Numerical tolerances shared by the eigensolver, the bound checks and the
/// extremal search. Acceptance checks refer to these by name.
struct Tolerances {
  /// Absolute accuracy expected of every eigenvalue.
  double eigen = 1e-9;
  /// Two q1 values closer than this are treated as a potential tie.
  double margin = 1e-6;
  /// Tie re-verification: near-maximal graphs must agree to this to count as tied.
  double tie_exact = 1e-12;
  /// Jacobi stops once the off-diagonal Frobenius norm is below offdiag_factor * order.
  double offdiag_factor = 1e-12;
  int max_sweeps = 100;
  /// Slack for equitability checks on non-integer matrices.
  double equitable_slack = 1e-12;
};

}  // namespace fanq
