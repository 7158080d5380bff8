// The Heisenberg group H = R^2 x| R, the extended affine group EA, the
// contraction charts between them, and the eps-interpolating products.

#pragma once

namespace framelab {

/// Element (c, (v1, v2)) of H with product
/// (a, v)(b, u) = (a + b, (v1 + u1 + a*u2, v2 + u2)).
struct HeisenbergElement {
  double c = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
};

/// Element (alpha, beta, gamma) of EA, alpha > 0, with product
/// (alpha, beta, gamma)(x, y, z) = (alpha*x, alpha*y + beta, gamma + z).
struct EAElement {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
};

HeisenbergElement heis_mul(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement heis_inverse(const HeisenbergElement& g);

EAElement ea_mul(const EAElement& g, const EAElement& h);
EAElement ea_inverse(const EAElement& g);

/// Contraction chart H -> EA:
///   (x, (y, z)) |-> (e^{-eps x}, z (e^{-eps x} - 1)/(-eps x), z + eps(y - x z / 2)),
/// continued by its limit at x = 0.  Requires eps in (0, 1].
EAElement to_extended_affine(double eps, const HeisenbergElement& g);

/// Exact inverse chart EA -> H; round trips are exact up to rounding.
HeisenbergElement to_heisenberg(double eps, const EAElement& g);

/// The interpolated product of G_eps: the EA product pulled through the
/// chart for eps > 0, the Heisenberg product at eps = 0.
HeisenbergElement interpolated_mul(double eps, const HeisenbergElement& x,
                                   const HeisenbergElement& y);

}  // namespace framelab
