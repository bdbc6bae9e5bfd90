#pragma once

#include <string>

namespace groverian::analytic {

/// Closed-form P_max together with its Groverian measure sqrt(1 - P_max).
struct AnalyticResult {
  double pmax = 1.0;
  double groverian = 0.0;
  std::string family_label;
  // true when the parameters land on a product state (pmax == 1)
  bool separable = false;
};

/// Generalized GHZ a|0..0> + b|1..1> with a^2 = a_sq, any n >= 2:
/// P_max = max(a^2, b^2). Endpoints 0 and 1 are accepted and flagged separable.
AnalyticResult pmax_gghz(double a_sq);

/// W_n: P_max = ((n-1)/n)^(n-1).
AnalyticResult pmax_w(int n);

/// Dicke D(n,k): P_max = C(n,k) (k/n)^k ((n-k)/n)^(n-k).
AnalyticResult pmax_dicke(int n, int k);

double groverian_from_pmax(double pmax);

}  // namespace groverian::analytic
