#include "tsc/frame.hpp"

#include <algorithm>

#include "tsc/normalform.hpp"

namespace tsc {

World World::check(std::vector<Ordinal> coords) {
  while (!coords.empty() && coords.back().is_zero()) coords.pop_back();
  for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
    if (coords[i + 1] > ell(coords[i]))
      throw WorldError(i, "not an l-sequence: coordinate " + std::to_string(i + 1) +
                              " exceeds the logarithm of coordinate " + std::to_string(i));
  }
  return World{std::move(coords)};
}

bool operator<(const World& a, const World& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

bool pointwise_geq(const World& x, const World& y) {
  if (y.support() > x.support()) return false;
  for (std::size_t i = 0; i < y.support(); ++i)
    if (x[i] < y[i]) return false;
  return true;
}

bool step(const World& x, Base n, const World& y) {
  for (std::size_t m = 0; m <= n; ++m)
    if (!(x[m] > y[m])) return false;
  const std::size_t top = std::max(x.support(), y.support());
  for (std::size_t i = n + 1; i < top; ++i)
    if (x[i] < y[i]) return false;
  return true;
}

World lift(const World& y, Base n, const Ordinal& alpha) {
  if (alpha.is_zero()) return y;
  std::vector<Ordinal> x(std::max<std::size_t>(y.support(), n + 1));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[i];
  x[n] = y[n] + omega_pow(y[n + 1]) * alpha;
  for (std::size_t i = n; i-- > 0;) x[i] = y[i] + omega_pow(x[i + 1]);
  return World::check(std::move(x));
}

bool steps(const World& x, Base n, const Ordinal& alpha, const World& y) {
  if (alpha.is_zero()) return x == y;
  return pointwise_geq(x, lift(y, n, alpha));
}

World join(const World& x, const World& y) {
  std::vector<Ordinal> z(std::max(x.support(), y.support()));
  Ordinal above;
  for (std::size_t i = z.size(); i-- > 0;) {
    z[i] = round_up_geq(std::max(x[i], y[i]), above);
    above = z[i];
  }
  return World::check(std::move(z));
}

bool sat(const World& x, const Formula& f) { return pointwise_geq(x, val(f)); }

}  // namespace tsc
