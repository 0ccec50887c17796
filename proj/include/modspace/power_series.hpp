#pragma once

#include <functional>
#include <string>
#include <vector>

#include "modspace/grid.hpp"

namespace modspace {

/// F(z0 + w) = F(z0) + sum_{j>=1} c_j w^j for |w| < radius.
///
/// `scaled_sup(r)` bounds max_j |c_j| r^j for 0 < r <= radius (finite radius)
/// or any r > 0 (entire functions); it drives the geometric tail bound
///   |sum_{j>J} c_j w^j| <= scaled_sup(r) q^{J+1} / (1 - q),   q = |w| / r.
class PowerSeries {
 public:
  PowerSeries(std::string name, cplx center, cplx constant, std::function<cplx(int)> coefficient,
              double radius, std::function<double(double)> scaled_sup, int degree = -1);

  const std::string& name() const { return name_; }
  cplx center() const { return center_; }
  cplx constant() const { return constant_; }
  double radius() const { return radius_; }
  /// Polynomial degree, or -1 for a genuine series.
  int degree() const { return degree_; }

  cplx coefficient(int j) const { return coefficient_(j); }
  std::vector<cplx> coefficients(int J) const;

  /// Radius used for the tail bound at |w| = w_abs.
  double bound_radius(double w_abs) const;
  double tail_bound(double w_abs, int J) const;
  /// Smallest J with tail_bound(w_abs, J) < tol; throws BudgetError when
  /// |w| is not inside the disc of convergence.
  int truncation_for(double w_abs, double tol = 1e-8) const;

  /// Partial sum through order J.
  cplx evaluate(cplx w, int J) const;

 private:
  std::string name_;
  cplx center_;
  cplx constant_;
  std::function<cplx(int)> coefficient_;
  double radius_;
  std::function<double(double)> scaled_sup_;
  int degree_;
};

/// An analytic F together with its expansion at any regular point.
struct AnalyticFunction {
  std::string name;
  std::function<cplx(cplx)> eval;
  std::function<PowerSeries(cplx)> expand;
  std::vector<cplx> singularities;
};

AnalyticFunction identity_function();
AnalyticFunction square_function();
/// 1/z
AnalyticFunction reciprocal_function();
/// z / (1 + z/4)
AnalyticFunction mobius_function();
/// e^z - 1
AnalyticFunction expm1_function();

/// Lookup by name: "identity", "square", "reciprocal", "mobius", "expm1".
AnalyticFunction analytic_function_by_name(const std::string& name);

}  // namespace modspace
