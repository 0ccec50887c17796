#include "modspace/smooth.hpp"

#include <cmath>

namespace modspace {

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  // Ratio form: no cancellation and overflow of the exponential just yields 0.
  return 1.0 / (1.0 + std::exp(1.0 / t - 1.0 / (1.0 - t)));
}

double plateau_bump(double t, double a, double b) {
  const double r = std::abs(t);
  if (r <= a) return 1.0;
  if (r >= b) return 0.0;
  return 1.0 - smooth_step((r - a) / (b - a));
}

double classic_bump(double t) {
  const double u = 1.0 - t * t;
  if (u <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / u);
}

}  // namespace modspace
