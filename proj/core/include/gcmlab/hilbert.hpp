#pragma once

#include <functional>
#include <vector>

#include "gcmlab/util.hpp"

namespace gcmlab {

// Binomial with the conventions needed by the sum formulas below:
// C(-1,-1) = 1, and 0 whenever a < 0, b < 0 or b > a otherwise.
inline long long binom_conv(long long a, long long b) {
  if (a == -1 && b == -1) return 1;
  if (a < 0 || b < 0 || b > a) return 0;
  return binom(a, b);
}

struct HilbertData {
  std::vector<long long> values;  // h(0), h(1), .., as far as sampled
  int degree = 0;                 // degree of the eventual polynomial
  std::vector<long long> e;       // coefficients e_0 .. e_degree
  int postulation = 0;            // least n from which the polynomial is exact

  // Value of the fitted polynomial:
  //   P(n) = sum_i (-1)^i e_i C(n + degree - i, degree - i).
  long long poly_at(long long n) const;
};

// Fits the eventual polynomial of a numerical function of polynomial type
// with nonnegative values, such as n -> length(M / m^(n+1) M). Samples are
// extended adaptively until the difference table stabilizes and the fit
// reproduces two extra values; throws when that never happens below the
// sampling limit.
HilbertData fit_hilbert(const std::function<long long(int)>& h);

}  // namespace gcmlab
