#include "framelab/groups.hpp"

#include <cmath>
#include <stdexcept>

namespace framelab {

namespace {

constexpr double kBranchTol = 1e-8;

void check_eps(double eps) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("contraction chart: eps must lie in (0, 1]");
}

// (e^{-u} - 1)/(-u), continued by 1 at u = 0.  Second-order Taylor branch in
// the cancellation zone.
double expm1_ratio(double u) {
  if (std::abs(u) < kBranchTol) return 1.0 - u / 2.0 + u * u / 6.0;
  return -std::expm1(-u) / u;
}

// log(alpha)/(alpha - 1), continued by 1 at alpha = 1.
double log_ratio(double alpha) {
  const double d = alpha - 1.0;
  if (std::abs(d) < kBranchTol) return 1.0 - d / 2.0 + d * d / 3.0;
  return std::log(alpha) / d;
}

// log(alpha)^2 / (2 (alpha - 1)), continued by 0 at alpha = 1.
double log_sq_ratio(double alpha) {
  const double d = alpha - 1.0;
  if (std::abs(d) < kBranchTol) return d / 2.0 - d * d / 2.0;
  const double l = std::log(alpha);
  return l * l / (2.0 * d);
}

}  // namespace

HeisenbergElement heis_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
  return {g.c + h.c, g.v1 + h.v1 + g.c * h.v2, g.v2 + h.v2};
}

HeisenbergElement heis_inverse(const HeisenbergElement& g) {
  return {-g.c, -g.v1 + g.c * g.v2, -g.v2};
}

EAElement ea_mul(const EAElement& g, const EAElement& h) {
  return {g.alpha * h.alpha, g.alpha * h.beta + g.beta, g.gamma + h.gamma};
}

EAElement ea_inverse(const EAElement& g) {
  return {1.0 / g.alpha, -g.beta / g.alpha, -g.gamma};
}

EAElement to_extended_affine(double eps, const HeisenbergElement& g) {
  check_eps(eps);
  const double u = eps * g.c;
  return {std::exp(-u), g.v2 * expm1_ratio(u),
          g.v2 + eps * (g.v1 - g.c * g.v2 / 2.0)};
}

HeisenbergElement to_heisenberg(double eps, const EAElement& g) {
  check_eps(eps);
  if (!(g.alpha > 0.0))
    throw std::invalid_argument("to_heisenberg: alpha must be > 0");
  const double c = -std::log(g.alpha) / eps;
  const double v2 = g.beta * log_ratio(g.alpha);
  const double v1 = (g.gamma - v2 - g.beta * log_sq_ratio(g.alpha)) / eps;
  return {c, v1, v2};
}

HeisenbergElement interpolated_mul(double eps, const HeisenbergElement& x,
                                   const HeisenbergElement& y) {
  if (eps == 0.0) return heis_mul(x, y);
  return to_heisenberg(eps, ea_mul(to_extended_affine(eps, x),
                                   to_extended_affine(eps, y)));
}

}  // namespace framelab
