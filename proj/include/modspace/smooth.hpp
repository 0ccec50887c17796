#pragma once

// C^infinity cutoff profiles shared by the partition of unity, the plateau
// windows and the localising bumps of the composition code.

namespace modspace {

/// e^{-1/t} / (e^{-1/t} + e^{-1/(1-t)}): 0 for t <= 0, 1 for t >= 1.
double smooth_step(double t);

/// Even bump equal to 1 on [-a, a], 0 outside (-b, b), smooth and monotone in
/// between.  Requires 0 <= a < b.
double plateau_bump(double t, double a, double b);

/// exp(1 - 1/(1 - t^2)) on (-1, 1), else 0.  Peak value 1 at t = 0.
double classic_bump(double t);

}  // namespace modspace
