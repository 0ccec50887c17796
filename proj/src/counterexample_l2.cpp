#include <cmath>
#include <string>

#include "modspace/counterexamples.hpp"
#include "modspace/error.hpp"
#include "modspace/grid.hpp"

namespace modspace {

namespace {

// Terms up to this index are summed one by one, in ascending order.
constexpr long long kDirectLimit = 1LL << 20;

const double kSqrt2 = std::sqrt(2.0);

// c / (k^a ln^b k) and its derivative.
struct Term {
  double c;
  int a;
  int b;
  double value(double k) const { return c / (std::pow(k, a) * std::pow(std::log(k), b)); }
  double derivative(double k) const {
    const double l = std::log(k);
    return -c * (a * l + b) / (std::pow(k, a + 1) * std::pow(l, b + 1));
  }
};

const Term kModulation{kSqrt2, 1, 1};
const Term kFourier{2.0, 1, 2};
const Term kL2{2.0, 2, 2};

// \int_a^b of each term.
double integral_modulation(double a, double b) {
  return kSqrt2 * std::log(std::log(b) / std::log(a));
}
double integral_fourier(double a, double b) { return 2.0 / std::log(a) - 2.0 / std::log(b); }
double integral_l2(double a, double b) {
  // u = ln k:  \int 2 e^{-u} / u^2 du = 2 (E1(u) - e^{-u} / u)
  auto F = [](double k) {
    const double u = std::log(k);
    return 2.0 * (-std::expint(-u) - 1.0 / (k * u));
  };
  return F(b) - F(a);
}

// sum_{k = a + 1}^{b} t(k) by Euler-Maclaurin through the first derivative
// term; the next correction is below 1e-24 for a >= 2^20.
double em_sum(const Term& t, double integral, double a, double b) {
  return integral + 0.5 * (t.value(b) - t.value(a)) +
         (t.derivative(b) - t.derivative(a)) / 12.0;
}

}  // namespace

L2PartialSums l2_partial_sums(long long k0, double K) {
  if (k0 < 2) throw InputError("k0 must be at least 2 so that ln k > 0");
  L2PartialSums s;
  const double top = std::floor(K);
  if (top < static_cast<double>(k0)) return s;
  const long long direct_end =
      top < static_cast<double>(kDirectLimit) ? static_cast<long long>(top) : kDirectLimit;
  for (long long k = k0; k <= direct_end; ++k) {
    const double kk = static_cast<double>(k);
    const double l = std::log(kk);
    s.modulation += kSqrt2 / (kk * l);
    s.fourier += 2.0 / (kk * l * l);
    s.l2 += 2.0 / (kk * kk * l * l);
  }
  if (top > static_cast<double>(direct_end)) {
    const double a = static_cast<double>(direct_end);
    s.modulation += em_sum(kModulation, integral_modulation(a, top), a, top);
    s.fourier += em_sum(kFourier, integral_fourier(a, top), a, top);
    s.l2 += em_sum(kL2, integral_l2(a, top), a, top);
  }
  return s;
}

double l2_fourier_tail(double K) {
  const double top = std::floor(K);
  if (top < 2.0) throw InputError("tail needs K >= 2");
  if (top >= static_cast<double>(kDirectLimit)) {
    // sum_{k > top} = \int_top^inf - t(top) / 2 - t'(top) / 12
    return 2.0 / std::log(top) - 0.5 * kFourier.value(top) - kFourier.derivative(top) / 12.0;
  }
  double direct = 0.0;
  for (auto k = static_cast<long long>(top) + 1; k <= kDirectLimit; ++k) {
    const double kk = static_cast<double>(k);
    const double l = std::log(kk);
    direct += 2.0 / (kk * l * l);
  }
  return direct + l2_fourier_tail(static_cast<double>(kDirectLimit));
}

SweepReport counterexample_l2(long long k0, const std::vector<double>& checkpoints) {
  if (k0 < 3) throw InputError("k0 must be at least 3");
  if (checkpoints.empty()) throw InputError("at least one checkpoint is required");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (!(checkpoints[i] >= static_cast<double>(k0)) || !std::isfinite(checkpoints[i])) {
      throw InputError("checkpoints must be finite and at least k0");
    }
    if (i > 0 && !(checkpoints[i] > checkpoints[i - 1])) {
      throw InputError("checkpoints must be increasing");
    }
  }
  SweepReport rep("counterexample-l2", "K");
  rep.set_columns({"K", "S_modulation", "S_fourier", "S_l2", "increment", "increment_oracle",
                   "fourier_tail", "tail_bound"});
  std::vector<L2PartialSums> sums;
  for (double K : checkpoints) sums.push_back(l2_partial_sums(k0, K));
  const double squaring = kSqrt2 * std::log(2.0);
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    const double K = checkpoints[i];
    const double tail = l2_fourier_tail(K);
    const double bound = 2.0 / std::log(std::floor(K));
    Json inc = nullptr;
    Json oracle = nullptr;
    if (i > 0) {
      const double d = sums[i].modulation - sums[i - 1].modulation;
      // Integral comparison: \int dk / (k ln k) = ln ln k.
      const double o = kSqrt2 * std::log(std::log(K) / std::log(checkpoints[i - 1]));
      inc = d;
      oracle = o;
      const std::string tag = format_double(checkpoints[i - 1]) + "->" + format_double(K);
      rep.check("modulation increment " + tag, std::abs(d - o) <= 0.1 * o, d, 0.1,
                "within 10% of sqrt(2) ln(ln K'/ln K) = " + format_double(o));
      const double ratio = std::log(K) / std::log(checkpoints[i - 1]);
      if (std::abs(ratio - 2.0) < 1e-9) {
        rep.check("squaring increment " + tag, std::abs(d - squaring) <= 0.1 * squaring, d, 0.1,
                  "within 10% of sqrt(2) ln 2");
      }
    }
    rep.check_le("fourier tail beyond " + format_double(K), tail, bound);
    rep.add_row(Json::array({K, sums[i].modulation, sums[i].fourier, sums[i].l2, inc, oracle,
                             tail, bound}));
  }
  if (checkpoints.size() >= 2) {
    bool shrinking = true;
    double last = 0.0;
    for (std::size_t i = 1; i < sums.size(); ++i) {
      const double d = sums[i].l2 - sums[i - 1].l2;
      if (i >= 2 && d > sums[i - 1].l2 - sums[i - 2].l2) shrinking = false;
      last = d;
    }
    rep.check("l2 differences decrease", shrinking, last, 0.0, "monotone");
    rep.set_summary("last_l2_difference", last);
  }
  // sum_{k > K} 2 / (k^2 ln^2 k) <= \int_K^inf = 2 (1 / (K ln K) - E1(ln K))
  const double K_last = std::floor(checkpoints.back());
  const double u = std::log(K_last);
  const double l2_tail = 2.0 * (1.0 / (K_last * u) + std::expint(-u));
  rep.check_le("l2 tail beyond last checkpoint", l2_tail, 1e-6);
  rep.set_summary("k0", k0);
  rep.set_summary("modulation_at_last", sums.back().modulation);
  rep.set_summary("fourier_at_last", sums.back().fourier);
  rep.set_summary("l2_at_last", sums.back().l2);
  rep.note("block norms: |chi_Ik|_2 / k = sqrt(2)/(k ln k), |chi_Ik|_1 / k = 2/(k ln^2 k)");
  rep.note("terms up to k = 2^20 are summed in ascending order; beyond that by Euler-Maclaurin");
  return rep;
}

}  // namespace modspace
