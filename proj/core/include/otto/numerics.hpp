#pragma once

#include <cmath>

namespace otto {

// coth(x) = 1 + 2/(e^{2x} - 1). Stays accurate for large x, where the
// cosh/sinh ratio overflows, and for small x through expm1.
inline double coth(double x) {
  if (x < 0.0) return -coth(-x);
  return 1.0 + 2.0 / std::expm1(2.0 * x);
}

// tanh via the same expm1 route so coth(x) * tanh(x) == 1 to rounding.
inline double tanh_stable(double x) { return 1.0 / coth(x); }

// sech(x) = 2e^{-|x|}/(1 + e^{-2|x|}); underflows to zero instead of
// dividing by an overflowed cosh.
template <typename Real>
Real sech(Real x) {
  using std::abs;
  using std::exp;
  const Real e = exp(-abs(x));
  return Real(2) * e / (Real(1) + e * e);
}

template <typename Real>
Real square(Real x) {
  return x * x;
}

}  // namespace otto
