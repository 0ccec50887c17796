#include "modspace/power_series.hpp"

#include <cmath>

#include "modspace/error.hpp"

namespace modspace {

PowerSeries::PowerSeries(std::string name, cplx center, cplx constant,
                         std::function<cplx(int)> coefficient, double radius,
                         std::function<double(double)> scaled_sup, int degree)
    : name_(std::move(name)),
      center_(center),
      constant_(constant),
      coefficient_(std::move(coefficient)),
      radius_(radius),
      scaled_sup_(std::move(scaled_sup)),
      degree_(degree) {
  if (!(radius_ > 0.0)) throw InputError("power series radius must be positive");
}

std::vector<cplx> PowerSeries::coefficients(int J) const {
  std::vector<cplx> c(static_cast<std::size_t>(std::max(J, 0)));
  for (int j = 1; j <= J; ++j) c[static_cast<std::size_t>(j - 1)] = coefficient_(j);
  return c;
}

double PowerSeries::bound_radius(double w_abs) const {
  if (std::isfinite(radius_)) return radius_;
  return std::max(2.0 * w_abs, 1.0);
}

double PowerSeries::tail_bound(double w_abs, int J) const {
  if (degree_ >= 0 && J >= degree_) return 0.0;
  const double r = bound_radius(w_abs);
  const double q = w_abs / r;
  if (q >= 1.0) return kInf;
  return scaled_sup_(r) * std::pow(q, J + 1) / (1.0 - q);
}

int PowerSeries::truncation_for(double w_abs, double tol) const {
  if (degree_ >= 0) return degree_;
  if (w_abs >= bound_radius(w_abs)) {
    throw BudgetError(name_ + ": |w| = " + std::to_string(w_abs) +
                      " is outside the disc of convergence");
  }
  for (int J = 1; J <= 100000; ++J) {
    if (tail_bound(w_abs, J) < tol) return J;
  }
  throw BudgetError(name_ + ": series converges too slowly for the requested tolerance");
}

cplx PowerSeries::evaluate(cplx w, int J) const {
  cplx acc{};
  for (int j = J; j >= 1; --j) acc = (acc + coefficient_(j)) * w;
  return constant_ + acc;
}

AnalyticFunction identity_function() {
  AnalyticFunction F;
  F.name = "identity";
  F.eval = [](cplx z) { return z; };
  F.expand = [](cplx z0) {
    return PowerSeries(
        "identity", z0, z0, [](int j) { return j == 1 ? cplx(1.0) : cplx(0.0); }, kInf,
        [](double r) { return r; }, 1);
  };
  return F;
}

AnalyticFunction square_function() {
  AnalyticFunction F;
  F.name = "square";
  F.eval = [](cplx z) { return z * z; };
  F.expand = [](cplx z0) {
    return PowerSeries(
        "square", z0, z0 * z0,
        [z0](int j) { return j == 1 ? 2.0 * z0 : (j == 2 ? cplx(1.0) : cplx(0.0)); }, kInf,
        [z0](double r) { return std::max(2.0 * std::abs(z0) * r, r * r); }, 2);
  };
  return F;
}

AnalyticFunction reciprocal_function() {
  AnalyticFunction F;
  F.name = "reciprocal";
  F.eval = [](cplx z) { return 1.0 / z; };
  F.singularities = {cplx(0.0)};
  F.expand = [](cplx z0) {
    if (z0 == cplx(0.0)) throw InputError("1/z has no expansion at 0");
    // 1/(z0 + w) = sum_j (-1)^j w^j / z0^{j+1}
    return PowerSeries(
        "reciprocal", z0, 1.0 / z0,
        [z0](int j) { return (j % 2 == 0 ? 1.0 : -1.0) / std::pow(z0, j + 1); }, std::abs(z0),
        [z0](double) { return 1.0 / std::abs(z0); });
  };
  return F;
}

AnalyticFunction mobius_function() {
  AnalyticFunction F;
  F.name = "mobius";
  F.eval = [](cplx z) { return z / (1.0 + z / 4.0); };
  F.singularities = {cplx(-4.0)};
  F.expand = [](cplx z0) {
    const cplx a = 4.0 + z0;
    if (a == cplx(0.0)) throw InputError("z/(1+z/4) has no expansion at -4");
    // z/(1+z/4) = 4 - 16/(4+z)
    return PowerSeries(
        "mobius", z0, z0 / (1.0 + z0 / 4.0),
        [a](int j) { return -16.0 * (j % 2 == 0 ? 1.0 : -1.0) / std::pow(a, j + 1); },
        std::abs(a), [a](double) { return 16.0 / std::abs(a); });
  };
  return F;
}

AnalyticFunction expm1_function() {
  AnalyticFunction F;
  F.name = "expm1";
  F.eval = [](cplx z) { return std::exp(z) - 1.0; };
  F.expand = [](cplx z0) {
    const cplx e = std::exp(z0);
    return PowerSeries(
        "expm1", z0, e - 1.0,
        [e](int j) {
          double fact = 1.0;
          for (int i = 2; i <= j; ++i) fact *= i;
          return e / fact;
        },
        kInf, [e](double r) { return std::abs(e) * std::exp(r); });
  };
  return F;
}

AnalyticFunction analytic_function_by_name(const std::string& name) {
  if (name == "identity") return identity_function();
  if (name == "square") return square_function();
  if (name == "reciprocal") return reciprocal_function();
  if (name == "mobius") return mobius_function();
  if (name == "expm1") return expm1_function();
  throw InputError("unknown analytic function '" + name + "'");
}

}  // namespace modspace
