#include "groverian/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "groverian/state.hpp"

namespace groverian::analytic {

namespace {

AnalyticResult make_result(double pmax, std::string label) {
  AnalyticResult r;
  r.pmax = pmax;
  r.groverian = groverian_from_pmax(pmax);
  r.family_label = std::move(label);
  r.separable = pmax == 1.0;
  return r;
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

}  // namespace

double groverian_from_pmax(double pmax) {
  if (!(pmax > 0.0 && pmax <= 1.0 + 1e-12)) {
    throw InvalidArgument("groverian_from_pmax: pmax must be in (0, 1], got " +
                          std::to_string(pmax));
  }
  return std::sqrt(std::max(0.0, 1.0 - pmax));
}

AnalyticResult pmax_gghz(double a_sq) {
  if (!(a_sq >= 0.0 && a_sq <= 1.0)) {
    throw InvalidArgument("pmax_gghz: a_sq must be in [0, 1], got " + std::to_string(a_sq));
  }
  return make_result(std::max(a_sq, 1.0 - a_sq), "gghz(a2=" + std::to_string(a_sq) + ")");
}

AnalyticResult pmax_w(int n) {
  if (n < 2) throw InvalidArgument("pmax_w: n must be >= 2, got " + std::to_string(n));
  const double ratio = static_cast<double>(n - 1) / n;
  return make_result(std::pow(ratio, n - 1), "w(" + std::to_string(n) + ")");
}

AnalyticResult pmax_dicke(int n, int k) {
  if (n < 1) throw InvalidArgument("pmax_dicke: n must be >= 1, got " + std::to_string(n));
  if (k < 0 || k > n) {
    throw InvalidArgument("pmax_dicke: k must be in [0, n], got " + std::to_string(k));
  }
  const std::string label = "dicke(" + std::to_string(n) + "," + std::to_string(k) + ")";
  if (k == 0 || k == n) return make_result(1.0, label);
  if (k == 1 && n >= 2) {
    // D(n,1) is W_n; share the evaluation so the two agree bit for bit
    auto r = pmax_w(n);
    r.family_label = label;
    return r;
  }
  const double p = static_cast<double>(k) / n;
  const double pmax = binomial(n, k) * std::pow(p, k) * std::pow(1.0 - p, n - k);
  return make_result(pmax, label);
}

}  // namespace groverian::analytic
